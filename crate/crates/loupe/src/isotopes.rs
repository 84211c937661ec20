//! Principal isotopes and G-loops.

use crate::loop_core::{find_isomorphism, validate_loop};
use crate::smarandache::is_s_subloop;
use crate::substructures::all_subloops;
use crate::{Caps, Element, Error, FiniteLoop, Result, SubLoop, Verdict};

/// The `(a, b)` principal isotope: `x * y = X·Y` where `X·a = x` and `b·Y = y`.
///
/// Its identity is `b·a`, which is moved to index 0. Labels follow the
/// elements, so the original name of every element is kept.
pub fn principal_isotope(l: &FiniteLoop, a: Element, b: Element) -> Result<FiniteLoop> {
    let n = l.order();
    if a >= n || b >= n {
        return Err(Error::ElementOutOfRange(a.max(b)));
    }
    let rows: Vec<Vec<usize>> = l
        .elements()
        .map(|x| l.elements().map(|y| l.mul(l.right_divide(a, x), l.left_divide(b, y))).collect())
        .collect();
    let labels = l.elements().map(|x| l.label(x)).collect();
    validate_loop(&rows, Some(labels))
}

fn check_isotope_count(k: usize, caps: &Caps) -> Result<()> {
    if k * k > caps.isotopes {
        return Err(Error::CapExceeded { what: "principal isotopes", limit: caps.isotopes });
    }
    Ok(())
}

/// Whether `L` is isomorphic to every principal isotope. The witness on
/// failure is the first `(a, b)` in lexicographic order whose isotope is not.
pub fn is_g_loop(l: &FiniteLoop, caps: &Caps) -> Result<Verdict> {
    check_isotope_count(l.order(), caps)?;
    for a in l.elements() {
        for b in l.elements() {
            if find_isomorphism(l, &principal_isotope(l, a, b)?).is_none() {
                return Ok(Verdict::fail(vec![a, b]));
            }
        }
    }
    Ok(Verdict::pass())
}

/// Principal isotope of the S-subloop `A`, viewed as a loop in its own right.
/// `a` and `b` are elements of `L` lying in `A`.
pub fn s_principal_isotope(l: &FiniteLoop, sub: &SubLoop, a: Element, b: Element) -> Result<FiniteLoop> {
    sub.check_parent(l)?;
    if !is_s_subloop(l, sub) {
        return Err(Error::NotAnSSubloop);
    }
    let pos = |x: Element| sub.elements().binary_search(&x).map_err(|_| Error::ElementOutOfRange(x));
    principal_isotope(&l.restrict(sub), pos(a)?, pos(b)?)
}

/// Some S-subloop is isomorphic to all of its principal isotopes.
///
/// The witness on success is that S-subloop. A loop without S-subloops is
/// judged by [`is_g_loop`] on the loop itself, and that verdict is returned.
pub fn is_s_g_loop(l: &FiniteLoop, caps: &Caps) -> Result<Verdict> {
    let census = all_subloops(l, caps)?;
    let s_subloops: Vec<&SubLoop> = census.subloops.iter().filter(|s| is_s_subloop(l, s)).collect();
    if s_subloops.is_empty() {
        return is_g_loop(l, caps);
    }
    for s in s_subloops {
        if is_g_loop(&l.restrict(s), caps)?.holds {
            return Ok(Verdict::pass_with(s.elements().to_vec()));
        }
    }
    Ok(Verdict::fail_bare())
}
