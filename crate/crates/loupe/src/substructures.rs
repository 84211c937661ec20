//! Subloop census, normality, nuclei, centres, derived subloops and
//! normalizers.

use std::collections::{BTreeSet, VecDeque};

use crate::loop_core::{quotient_loop, sorted};
use crate::{Caps, Element, Error, FiniteLoop, Result, SubLoop, Verdict};

/// Every subloop of a loop, sorted by order and then by elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubloopCensus {
    pub subloops: Vec<SubLoop>,
    pub subgroup: Vec<bool>,
    pub normal: Vec<bool>,
}

impl SubloopCensus {
    pub fn subgroups(&self) -> impl Iterator<Item = &SubLoop> {
        self.subloops.iter().zip(&self.subgroup).filter(|(_, &g)| g).map(|(s, _)| s)
    }

    pub fn normal_subloops(&self) -> impl Iterator<Item = &SubLoop> {
        self.subloops.iter().zip(&self.normal).filter(|(_, &g)| g).map(|(s, _)| s)
    }

    pub fn normal_subgroups(&self) -> impl Iterator<Item = &SubLoop> {
        self.subloops.iter().enumerate().filter(|&(i, _)| self.normal[i] && self.subgroup[i]).map(|(_, s)| s)
    }
}

/// Subloops only, without subgroup or normality flags.
pub fn subloop_sets(l: &FiniteLoop, caps: &Caps) -> Result<Vec<SubLoop>> {
    if l.order() > caps.census_order {
        return Err(Error::SizeCapExceeded { what: "census parent order", limit: caps.census_order });
    }
    let mut found: BTreeSet<Vec<Element>> = BTreeSet::from([vec![0]]);
    let mut queue = VecDeque::from([vec![0]]);
    while let Some(s) = queue.pop_front() {
        let mut member = vec![false; l.order()];
        for &x in &s {
            member[x] = true;
        }
        for x in l.elements().filter(|&x| !member[x]) {
            let t = l.closure(s.iter().copied().chain([x]));
            if !found.contains(&t) {
                if found.len() >= caps.census {
                    return Err(Error::CapExceeded { what: "subloop census", limit: caps.census });
                }
                found.insert(t.clone());
                queue.push_back(t);
            }
        }
    }
    let mut subs: Vec<SubLoop> = found.into_iter().map(|v| SubLoop::from_sorted_unchecked(v, l.order())).collect();
    subs.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements().cmp(b.elements())));
    Ok(subs)
}

/// Closure of `{e}` under one-element extensions, run to a fixpoint.
pub fn all_subloops(l: &FiniteLoop, caps: &Caps) -> Result<SubloopCensus> {
    let subloops = subloop_sets(l, caps)?;
    let subgroup = subloops.iter().map(|s| l.is_subgroup(s)).collect();
    let normal = subloops.iter().map(|s| is_normal_subloop(l, s).holds).collect();
    Ok(SubloopCensus { subloops, subgroup, normal })
}

/// Checks `xH = Hx`, `(Hx)y = H(xy)` and `y(xH) = (yx)H`; the witness is
/// `[condition, x, y]`.
pub fn is_normal_subloop(l: &FiniteLoop, h: &SubLoop) -> Verdict {
    match crate::loop_core::constructors_normality_failure(l, h) {
        Some((c, x, y)) => Verdict::fail(vec![c as usize, x, y]),
        None => Verdict::pass(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NucleusPosition {
    Left,
    Middle,
    Right,
    Full,
}

fn nucleus_set(l: &FiniteLoop, on: &[Element], pos: NucleusPosition) -> Vec<Element> {
    let vanishes = |a: Element| {
        on.iter().all(|&x| {
            on.iter().all(|&y| {
                let assoc = match pos {
                    NucleusPosition::Left => l.associator(a, x, y),
                    NucleusPosition::Middle => l.associator(x, a, y),
                    NucleusPosition::Right => l.associator(x, y, a),
                    NucleusPosition::Full => unreachable!(),
                };
                assoc == 0
            })
        })
    };
    match pos {
        NucleusPosition::Full => {
            let left = nucleus_set(l, on, NucleusPosition::Left);
            let mid = nucleus_set(l, on, NucleusPosition::Middle);
            let right = nucleus_set(l, on, NucleusPosition::Right);
            left.into_iter().filter(|x| mid.contains(x) && right.contains(x)).collect()
        }
        _ => on.iter().copied().filter(|&a| vanishes(a)).collect(),
    }
}

/// Nucleus computed inside the element set `on` (a subloop).
pub(crate) fn nucleus_within(l: &FiniteLoop, on: &[Element], pos: NucleusPosition) -> SubLoop {
    l.subloop(&nucleus_set(l, on, pos)).expect("nuclei are subloops")
}

pub fn nucleus(l: &FiniteLoop, pos: NucleusPosition) -> SubLoop {
    nucleus_within(l, &l.elements().collect::<Vec<_>>(), pos)
}

/// The commutant `{x : xy = yx for all y}`. When the set is not closed the
/// generated subloop is returned with `closed = false`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Commutant {
    pub subloop: SubLoop,
    pub closed: bool,
}

pub(crate) fn commutant_within(l: &FiniteLoop, on: &[Element]) -> Commutant {
    let set: Vec<Element> = on.iter().copied().filter(|&x| on.iter().all(|&y| l.mul(x, y) == l.mul(y, x))).collect();
    match l.subloop(&set) {
        Ok(subloop) => Commutant { subloop, closed: true },
        Err(_) => Commutant { subloop: l.generated_subloop(set), closed: false },
    }
}

pub fn moufang_centre(l: &FiniteLoop) -> Commutant {
    commutant_within(l, &l.elements().collect::<Vec<_>>())
}

pub(crate) fn centre_within(l: &FiniteLoop, on: &[Element]) -> SubLoop {
    let c = commutant_within(l, on);
    let n = nucleus_set(l, on, NucleusPosition::Full);
    let set: Vec<Element> = n.into_iter().filter(|&x| c.subloop.contains(x)).collect();
    l.generated_subloop(set)
}

/// `C(L) ∩ N(L)`.
pub fn centre(l: &FiniteLoop) -> SubLoop {
    centre_within(l, &l.elements().collect::<Vec<_>>())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DerivedKind {
    Commutator,
    Associator,
    PseudoCommutator,
    StronglyPseudoCommutator,
    PseudoAssociator,
    StronglyPseudoAssociator,
}

/// The generating set of a derived subloop, computed inside `on`.
///
/// Pseudo kinds collect every solution `p` (or `t`) of the defining equation
/// for at least one admissible tuple: commuting pairs `(a, b)` with any `x`
/// for the pseudo commutator, distinct pairs for the strong form,
/// associative triples for the pseudo associator and non-associative
/// triples for the strong form.
pub(crate) fn derived_generators(l: &FiniteLoop, on: &[Element], kind: DerivedKind) -> Vec<Element> {
    let m = |a, b| l.mul(a, b);
    let mut hit = vec![false; l.order()];
    match kind {
        DerivedKind::Commutator => {
            for &x in on {
                for &y in on {
                    hit[l.commutator(x, y)] = true;
                }
            }
        }
        DerivedKind::Associator => {
            for &x in on {
                for &y in on {
                    for &z in on {
                        hit[l.associator(x, y, z)] = true;
                    }
                }
            }
        }
        DerivedKind::PseudoCommutator => {
            for &a in on {
                for &b in on {
                    if m(a, b) != m(b, a) {
                        continue;
                    }
                    for &x in on {
                        hit[l.right_divide(m(m(b, x), a), m(a, m(x, b)))] = true;
                    }
                }
            }
        }
        DerivedKind::StronglyPseudoCommutator => {
            for &a in on {
                for &b in on.iter().filter(|&&b| b != a) {
                    for &x in on {
                        let ax = m(a, x);
                        let pb = l.right_divide(ax, m(ax, b));
                        hit[l.right_divide(b, pb)] = true;
                    }
                }
            }
        }
        DerivedKind::PseudoAssociator | DerivedKind::StronglyPseudoAssociator => {
            let want_assoc = kind == DerivedKind::PseudoAssociator;
            for &a in on {
                for &b in on {
                    let ab = m(a, b);
                    for &c in on {
                        if (m(ab, c) == m(a, m(b, c))) != want_assoc {
                            continue;
                        }
                        let bc = m(b, c);
                        for &t in on {
                            if m(ab, m(t, c)) == m(m(a, t), bc) {
                                hit[t] = true;
                            }
                        }
                    }
                }
            }
        }
    }
    l.elements().filter(|&x| hit[x]).collect()
}

pub fn derived_subloop(l: &FiniteLoop, kind: DerivedKind) -> SubLoop {
    let all: Vec<Element> = l.elements().collect();
    l.generated_subloop(derived_generators(l, &all, kind))
}

/// Intersection of the maximal proper subloops; the whole loop when there
/// is no proper subloop.
pub fn frattini_subloop(l: &FiniteLoop, caps: &Caps) -> Result<SubLoop> {
    let subs = subloop_sets(l, caps)?;
    let proper: Vec<&SubLoop> = subs.iter().filter(|s| s.is_proper()).collect();
    let maximal = proper.iter().filter(|s| !proper.iter().any(|t| t.order() > s.order() && s.is_subset_of(t)));
    Ok(maximal.fold(l.whole(), |acc, s| acc.meet(s)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    CentrallyDerived,
    NuclearlyDerived,
}

/// Smallest normal subloop whose quotient is an abelian group (centrally
/// derived) or a group (nuclearly derived).
pub fn derived_series_target(l: &FiniteLoop, kind: SeriesKind, caps: &Caps) -> Result<SubLoop> {
    let census = all_subloops(l, caps)?;
    for n in census.normal_subloops() {
        let q = quotient_loop(l, n)?;
        let ok = q.is_associative() && (kind == SeriesKind::NuclearlyDerived || q.is_commutative());
        if ok {
            return Ok(n.clone());
        }
    }
    Ok(l.whole())
}

/// `{a : aH = Ha}`.
pub fn first_normalizer(l: &FiniteLoop, h: &SubLoop) -> Vec<Element> {
    let hs = h.elements();
    l.elements().filter(|&a| l.left_coset(a, hs) == l.right_coset(hs, a)).collect()
}

/// `{x : {(xh)x : h ∈ H} = H}`.
pub fn second_normalizer(l: &FiniteLoop, h: &SubLoop) -> Vec<Element> {
    let hs = h.elements();
    l.elements().filter(|&x| sorted(hs.iter().map(|&y| l.mul(l.mul(x, y), x))) == hs).collect()
}

/// Second normalizer with the other bracketing, `{x : {x(hx)} = H}`.
pub fn second_normalizer_right(l: &FiniteLoop, h: &SubLoop) -> Vec<Element> {
    let hs = h.elements();
    l.elements().filter(|&x| sorted(hs.iter().map(|&y| l.mul(x, l.mul(y, x)))) == hs).collect()
}
