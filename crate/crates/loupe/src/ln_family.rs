//! The loops `L_n(m)` on `{e, 1, ..., n}`: `i·i = e` and, for `i ≠ j`,
//! `i·j = m·j − (m−1)·i (mod n)` with residue 0 written as `n`.

use std::collections::BTreeMap;

use crate::{Error, FiniteLoop, Result, SubLoop};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LnParams {
    n: u64,
    m: u64,
}

impl LnParams {
    pub fn new(n: u64, m: u64) -> Result<Self> {
        check_n(n)?;
        let reason = if m <= 1 || m >= n {
            Some("m must satisfy 1 < m < n")
        } else if gcd(m, n) != 1 {
            Some("gcd(m, n) must be 1")
        } else if gcd(m - 1, n) != 1 {
            Some("gcd(m - 1, n) must be 1")
        } else {
            None
        };
        match reason {
            Some(reason) => Err(Error::InvalidParams { n, m, reason }),
            None => Ok(LnParams { n, m }),
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }
}

impl std::fmt::Display for LnParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "L_{}({})", self.n, self.m)
    }
}

fn check_n(n: u64) -> Result<()> {
    if n > 3 && n % 2 == 1 {
        Ok(())
    } else {
        Err(Error::InvalidN(n))
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Prime factorization as `(p, α)` pairs in ascending order of `p`.
pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut a = 0;
            while n.is_multiple_of(p) {
                n /= p;
                a += 1;
            }
            out.push((p, a));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Product computed by the defining formula, on labels `0 = e, 1..=n`.
pub fn ln_mul(p: LnParams, i: u64, j: u64) -> u64 {
    let n = p.n;
    if i == 0 {
        return j;
    }
    if j == 0 {
        return i;
    }
    if i == j {
        return 0;
    }
    let t = ((p.m * j) as i128 - ((p.m - 1) * i) as i128).rem_euclid(n as i128) as u64;
    if t == 0 {
        n
    } else {
        t
    }
}

pub fn labels(n: u64) -> Vec<String> {
    std::iter::once("e".to_string()).chain((1..=n).map(|i| i.to_string())).collect()
}

pub fn build_ln(p: LnParams) -> FiniteLoop {
    let size = p.n as usize + 1;
    let flat = (0..size * size).map(|c| ln_mul(p, (c / size) as u64, (c % size) as u64) as usize).collect();
    FiniteLoop::from_flat_unchecked(size, flat, Some(labels(p.n)))
}

pub fn enumerate_ln_params(n: u64) -> Result<Vec<u64>> {
    check_n(n)?;
    Ok((2..n).filter(|&m| gcd(m, n) == 1 && gcd(m - 1, n) == 1).collect())
}

pub fn count_ln(n: u64) -> Result<u64> {
    check_n(n)?;
    Ok(factorize(n).iter().map(|&(p, a)| (p - 2) * p.pow(a - 1)).product())
}

pub fn count_strictly_noncommutative(n: u64) -> Result<u64> {
    check_n(n)?;
    Ok(factorize(n).iter().map(|&(p, a)| (p - 3) * p.pow(a - 1)).product())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct LnFlags {
    pub commutative: bool,
    pub right_alternative: bool,
    pub left_alternative: bool,
    pub wip: bool,
}

pub fn ln_predicted_flags(p: LnParams) -> LnFlags {
    let (n, m) = (p.n, p.m);
    LnFlags {
        commutative: 2 * m == n + 1,
        right_alternative: m == 2,
        left_alternative: m == n - 1,
        wip: (m * m - m + 1) % n == 0,
    }
}

/// `H_i(t) = {e, i, i+t, i+2t, ...}` for `t | n` and `1 ≤ i ≤ t`.
pub fn h_subloop(p: LnParams, i: u64, t: u64) -> Result<SubLoop> {
    if t == 0 || !p.n.is_multiple_of(t) {
        return Err(Error::NotADivisor { t, n: p.n });
    }
    if i == 0 || i > t {
        return Err(Error::BadIndex { i, t });
    }
    let els: Vec<usize> = std::iter::once(0).chain((i..=p.n).step_by(t as usize).map(|x| x as usize)).collect();
    let l = build_ln(p);
    l.subloop(&els)
}

/// For every divisor `t > 1` of `n`, the subloops `H_1(t), ..., H_t(t)`.
pub fn all_h_subloops(p: LnParams) -> Vec<(u64, Vec<SubLoop>)> {
    let l = build_ln(p);
    divisors(p.n)
        .into_iter()
        .filter(|&t| t > 1)
        .map(|t| {
            let group = (1..=t)
                .map(|i| {
                    let els: Vec<usize> =
                        std::iter::once(0).chain((i..=p.n).step_by(t as usize).map(|x| x as usize)).collect();
                    l.subloop(&els).expect("H_i(t) is closed")
                })
                .collect();
            (t, group)
        })
        .collect()
}

pub(crate) fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Predicted first and second normalizers of `H_i(t)`:
/// `H_i(t / gcd(2m−1, t))` and `H_i(t / gcd(m²−m+1, t))`, where `H_i(1)` is
/// the whole loop.
pub fn predicted_normalizers(p: LnParams, i: u64, t: u64) -> Result<(SubLoop, SubLoop)> {
    h_subloop(p, i, t)?;
    let m = p.m;
    let k1 = t / gcd(2 * m - 1, t);
    let k2 = t / gcd(m * m - m + 1, t);
    let reduce = |k: u64| (i - 1) % k + 1;
    Ok((h_subloop(p, reduce(k1), k1)?, h_subloop(p, reduce(k2), k2)?))
}

/// Cycle lengths and multiplicities, including fixed points when present.
pub type CycleCounts = BTreeMap<usize, usize>;

/// Predicted cycle class of every non-identity right translation `R_a`.
///
/// With `d_k = gcd((m−1)^k + (−1)^(k−1), n)`, lengths `k = 1, 2, ...` are
/// scanned; each new value `1 < d_k < n` contributes `⌊(d_k − 1)/k⌋`
/// cycles of length `k`, and at the first `t` with `d_t = n` the remaining
/// elements are split into cycles of length `t`. The transposition `(a e)`
/// is always present. When the remainder is not a multiple of `t` the rule
/// has no consistent answer and [`Error::CycleRuleBreaks`] is returned.
pub fn predicted_cycle_class(p: LnParams) -> Result<CycleCounts> {
    let (n, m) = (p.n, p.m);
    let mut counts = CycleCounts::new();
    counts.insert(2, 1);
    let mut remaining = (n - 1) as usize;
    let mut seen = Vec::new();
    let mut power = 1u64;
    for k in 1usize.. {
        power = power * (m - 1) % n;
        let sign = if k % 2 == 1 { 1 } else { n - 1 };
        let d = gcd((power + sign) % n, n);
        if d == n {
            if !remaining.is_multiple_of(k) {
                return Err(Error::CycleRuleBreaks { n, m, length: k, remainder: remaining });
            }
            if remaining > 0 {
                *counts.entry(k).or_insert(0) += remaining / k;
            }
            break;
        }
        if d > 1 && !seen.contains(&d) {
            seen.push(d);
            let c = (d as usize - 1) / k;
            if c > 0 {
                *counts.entry(k).or_insert(0) += c;
                remaining -= c * k;
            }
        }
    }
    Ok(counts)
}
