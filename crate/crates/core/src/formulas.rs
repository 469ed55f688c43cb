//! Closed-form edge counts and the case dispatch for `ex(n, T^{p+1})`.
//!
//! Everything is exact `u64` arithmetic.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::construct::ConstructionSpec;
use crate::error::{Error, Result};
use crate::tree::TreeParams;

pub fn binom2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

/// `e(T_{n,r})`.
pub fn turan_edges(n: u64, r: u64) -> u64 {
    assert!(r >= 1, "Turán graph needs at least one part");
    let (q, s) = (n / r, n % r);
    binom2(n) - s * binom2(q + 1) - (r - s) * binom2(q)
}

pub fn g1(k: u64) -> u64 {
    if k % 2 == 0 {
        k * k - 3 * k / 2
    } else {
        k * k - (3 * k - 1) / 2
    }
}

pub fn g2(k: u64) -> u64 {
    if k % 2 == 0 {
        k * k - 3 * k / 2
    } else {
        k * k - k
    }
}

fn check_nap(n: u64, p: u64, a: u64) -> Result<()> {
    if a == 0 || p == 0 || n < a {
        return Err(Error::Infeasible(format!(
            "need n >= a >= 1 and p >= 1, got n={n} p={p} a={a}"
        )));
    }
    Ok(())
}

/// `e(T_{n−a+1,p}) + (a−1)(n−a+1) + C(a−1, 2)`.
pub fn g(n: u64, p: u64, a: u64) -> Result<u64> {
    check_nap(n, p, a)?;
    let m = n - a + 1;
    Ok(turan_edges(m, p) + (a - 1) * m + binom2(a - 1))
}

/// `g` with the `K_{a−1}` term replaced by `e(R(a−1, d)) = ⌊(a−1)d/2⌋`.
pub fn g_d(n: u64, p: u64, a: u64, d: u64) -> Result<u64> {
    check_nap(n, p, a)?;
    if a > 1 && d >= a - 1 {
        return Err(Error::Infeasible(format!(
            "R({}, {d}) needs d < {}",
            a - 1,
            a - 1
        )));
    }
    let m = n - a + 1;
    Ok(turan_edges(m, p) + (a - 1) * m + (a - 1) * d / 2)
}

/// `νΔ + ⌊Δ/2⌋·⌊ν/⌈Δ/2⌉⌋`.
pub fn chvatal_hanson(nu: u64, delta: u64) -> u64 {
    assert!(nu >= 1 && delta >= 1, "bound stated for nu, delta >= 1");
    nu * delta + (delta / 2) * (nu / delta.div_ceil(2))
}

/// Edge bound for a component on `x` vertices of a `{K_{1,k}, 2K_{1,k−1}}`-free graph.
pub fn component_bound_f(x: u64, k: u64) -> u64 {
    if x < k {
        binom2(x)
    } else {
        (k - 1) * x / 2
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremTag {
    KEven,
    KOddB0Empty,
    KOddBSmall,
    KOddBLarge,
    KOddBBoundary,
}

impl TheoremTag {
    pub const ALL: [TheoremTag; 5] = [
        TheoremTag::KEven,
        TheoremTag::KOddB0Empty,
        TheoremTag::KOddBSmall,
        TheoremTag::KOddBLarge,
        TheoremTag::KOddBBoundary,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremTag::KEven => "K_EVEN",
            TheoremTag::KOddB0Empty => "K_ODD_B0_EMPTY",
            TheoremTag::KOddBSmall => "K_ODD_B_SMALL",
            TheoremTag::KOddBLarge => "K_ODD_B_LARGE",
            TheoremTag::KOddBBoundary => "K_ODD_B_BOUNDARY",
        }
    }
}

impl fmt::Display for TheoremTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremTag::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown theorem tag {s:?}")))
    }
}

/// The branch of the theorem, its value and the extremal constructions it names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremCase {
    pub tag: TheoremTag,
    pub value: u64,
    pub extremal: Vec<ConstructionSpec>,
}

/// `a − 1 − ⌈(k−1)/(a−1)⌉`, or `None` when `a = 1`.
pub fn boundary(a: u64, k: u64) -> Option<i64> {
    if a <= 1 {
        return None;
    }
    Some(a as i64 - 1 - (k - 1).div_ceil(a - 1) as i64)
}

/// Compares `g(n,p,a) + g₁(k)` with `g(n,p,a,b−1) + g₂(k)` directly.
pub fn compare_candidates(n: u64, p: u64, a: u64, b: u64, k: u64) -> Result<Ordering> {
    if b == 0 {
        return Err(Error::Infeasible("second candidate needs b >= 1".into()));
    }
    Ok((g(n, p, a)? + g1(k)).cmp(&(g_d(n, p, a, b - 1)? + g2(k))))
}

/// Selects the branch of the theorem for a tree with parameters `params`.
///
/// At the boundary `b = a−1−⌈(k−1)/(a−1)⌉ > 0` the value is `g + g₁`;
/// `H2_RD` is listed next to `H1` when its edge count is equal.
pub fn dispatch(params: &TreeParams, n: u64, p: u64) -> Result<TheoremCase> {
    let (a, k) = (params.a as u64, params.k as u64);
    if k <= 1 {
        return Err(Error::OutsideTheorem(format!(
            "k = {k}: the theorem needs delta(A) >= 2; trees with a leaf in A are covered by the separate result for k = 1"
        )));
    }
    if p <= 2 {
        return Err(Error::OutsideTheorem(format!("p = {p}: the theorem needs p >= 3")));
    }
    let (nu, pu, au, ku) = (n as usize, p as usize, a as usize, k as usize);
    let h1 = ConstructionSpec::H1 { n: nu, p: pu, a: au, k: ku, class: 0 };
    let h2 = ConstructionSpec::H2 { n: nu, p: pu, a: au, k: ku, class: 0 };
    let case = if k % 2 == 0 {
        TheoremCase {
            tag: TheoremTag::KEven,
            value: g(n, p, a)? + g1(k),
            extremal: vec![h1, h2],
        }
    } else if params.b0.is_empty() {
        TheoremCase {
            tag: TheoremTag::KOddB0Empty,
            value: g(n, p, a)? + g2(k),
            extremal: vec![h2],
        }
    } else {
        let b = params
            .b
            .ok_or_else(|| Error::Infeasible("B0 is non-empty but b is missing".into()))?
            as u64;
        let edge = boundary(a, k).ok_or_else(|| {
            Error::Infeasible("a = 1 with non-empty B0 cannot come from a tree".into())
        })?;
        let rd = || ConstructionSpec::H2Rd {
            n: nu,
            p: pu,
            a: au,
            d: b as usize - 1,
            k: ku,
            class: 0,
        };
        let b_i = b as i64;
        if b == 0 || b_i < edge {
            TheoremCase {
                tag: TheoremTag::KOddBSmall,
                value: g(n, p, a)? + g1(k),
                extremal: vec![h1],
            }
        } else if b_i == edge {
            // the two candidates tie here only when (a−1) | (k−1); otherwise H1 is strictly larger
            let mut extremal = vec![h1];
            if compare_candidates(n, p, a, b, k)? == Ordering::Equal {
                extremal.push(rd());
            }
            TheoremCase {
                tag: TheoremTag::KOddBBoundary,
                value: g(n, p, a)? + g1(k),
                extremal,
            }
        } else {
            TheoremCase {
                tag: TheoremTag::KOddBLarge,
                value: g_d(n, p, a, b - 1)? + g2(k),
                extremal: vec![rd()],
            }
        }
    };
    for spec in &case.extremal {
        spec.check_feasible()?;
    }
    Ok(case)
}
