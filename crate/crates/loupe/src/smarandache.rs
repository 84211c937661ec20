//! Smarandache notions: S-loops, S-subloops, classical criteria, relative
//! derived subloops, S-identities, cosets and hyperloops.
//!
//! A subgroup witnessing any S-property must have at least two elements;
//! the trivial subgroup `{e}` never counts.

use std::collections::{BTreeMap, BTreeSet};

use crate::identities::{check_law, is_arif, is_diassociative, is_power_associative, law_holds_at, Law};
use crate::ln_family::factorize;
use crate::substructures::{
    all_subloops, centre_within, commutant_within, derived_generators, first_normalizer, is_normal_subloop,
    nucleus_within, second_normalizer, DerivedKind, NucleusPosition, SubloopCensus,
};
use crate::{Caps, Element, Error, FiniteLoop, Result, SubLoop, Verdict};

/// Elements `x ≠ e` whose generated subloop is a proper group, with that group.
fn cyclic_subgroups(l: &FiniteLoop) -> Vec<(Element, Vec<Element>)> {
    (1..l.order())
        .filter_map(|x| {
            let g = l.closure([x]);
            (g.len() < l.order() && l.is_associative_on(&g)).then_some((x, g))
        })
        .collect()
}

/// A proper subset of order at least 2 that is a group; witness is the
/// smallest one (ties broken lexicographically).
pub fn is_s_loop(l: &FiniteLoop) -> Verdict {
    let best =
        cyclic_subgroups(l).into_iter().map(|(_, g)| g).min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Verdict::from_example(best)
}

/// A proper subloop that is not a subgroup but contains a subgroup of
/// order at least 2.
pub fn is_s_subloop(l: &FiniteLoop, a: &SubLoop) -> bool {
    a.is_proper() && !l.is_subgroup(a) && a.elements().iter().any(|&x| x != 0 && l.is_associative_on(&l.closure([x])))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SSubstructures {
    pub s_subloops: Vec<SubLoop>,
    pub s_normal_subloops: Vec<SubLoop>,
    pub s_simple: bool,
    pub s_subgroup_loop: bool,
}

fn s_substructures_from(l: &FiniteLoop, census: &SubloopCensus) -> SSubstructures {
    let s_subloops: Vec<SubLoop> = census.subloops.iter().filter(|s| is_s_subloop(l, s)).cloned().collect();
    let s_normal_subloops: Vec<SubLoop> =
        s_subloops.iter().filter(|s| is_normal_subloop(l, s).holds).cloned().collect();
    let every_proper_is_group = census.subloops.iter().zip(&census.subgroup).all(|(s, &g)| !s.is_proper() || g);
    SSubstructures {
        s_simple: s_normal_subloops.is_empty(),
        s_subgroup_loop: is_s_loop(l).holds && every_proper_is_group,
        s_subloops,
        s_normal_subloops,
    }
}

pub fn s_substructures(l: &FiniteLoop, caps: &Caps) -> Result<SSubstructures> {
    Ok(s_substructures_from(l, &all_subloops(l, caps)?))
}

/// Every flag of [`SReport`]. Witnesses are subgroup or subloop element
/// sets, or single elements for the Cauchy flag; the Sylow flags name the
/// first prime that has no suitable subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SFlags {
    pub s_simple: Verdict,
    pub s_subgroup_loop: Verdict,
    pub s_cauchy: Verdict,
    pub s_lagrange: Verdict,
    pub s_weakly_lagrange: Verdict,
    pub s_pseudo_lagrange: Verdict,
    pub s_weakly_pseudo_lagrange: Verdict,
    pub s_lagrange_criteria: Verdict,
    pub s_sylow_criteria: Verdict,
    pub s_commutative: Verdict,
    pub s_strongly_commutative: Verdict,
    pub s_cyclic: Verdict,
    pub s_strongly_cyclic: Verdict,
    pub s_loop_ii: Verdict,
    pub s_lagrange_criteria_ii: Verdict,
    pub s_sylow_criteria_ii: Verdict,
}

impl SFlags {
    pub fn entries(&self) -> [(&'static str, &Verdict); 16] {
        [
            ("s_simple", &self.s_simple),
            ("s_subgroup_loop", &self.s_subgroup_loop),
            ("s_cauchy", &self.s_cauchy),
            ("s_lagrange", &self.s_lagrange),
            ("s_weakly_lagrange", &self.s_weakly_lagrange),
            ("s_pseudo_lagrange", &self.s_pseudo_lagrange),
            ("s_weakly_pseudo_lagrange", &self.s_weakly_pseudo_lagrange),
            ("s_lagrange_criteria", &self.s_lagrange_criteria),
            ("s_sylow_criteria", &self.s_sylow_criteria),
            ("s_commutative", &self.s_commutative),
            ("s_strongly_commutative", &self.s_strongly_commutative),
            ("s_cyclic", &self.s_cyclic),
            ("s_strongly_cyclic", &self.s_strongly_cyclic),
            ("s_loop_ii", &self.s_loop_ii),
            ("s_lagrange_criteria_ii", &self.s_lagrange_criteria_ii),
            ("s_sylow_criteria_ii", &self.s_sylow_criteria_ii),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SReport {
    pub is_s_loop: Verdict,
    /// Proper subgroups of order at least 2.
    pub witnesses: Vec<SubLoop>,
    pub s_subloops: Vec<SubLoop>,
    pub s_normal_subloops: Vec<SubLoop>,
    pub flags: SFlags,
}

fn divides(k: usize, n: usize) -> bool {
    n.is_multiple_of(k)
}

fn primes_of(n: usize) -> Vec<usize> {
    factorize(n as u64).into_iter().map(|(p, _)| p as usize).collect()
}

fn is_prime_power(k: usize) -> bool {
    k > 1 && factorize(k as u64).len() == 1
}

fn first_failing<'a>(it: impl IntoIterator<Item = &'a SubLoop>, ok: impl Fn(&SubLoop) -> bool) -> Verdict {
    Verdict::from_counterexample(it.into_iter().find(|s| !ok(s)).map(|s| s.elements().to_vec()))
}

fn first_passing<'a>(it: impl IntoIterator<Item = &'a SubLoop>, ok: impl Fn(&SubLoop) -> bool) -> Verdict {
    Verdict::from_example(it.into_iter().find(|s| ok(s)).map(|s| s.elements().to_vec()))
}

/// For every prime `p | |L|`, some subgroup has order a power of `p`.
///
/// A group of order `p^k` contains an element of order `p`, so it is enough
/// to look for cyclic subgroups of prime order; no census is needed. The
/// witness is the first prime without one.
pub fn s_sylow_criteria(l: &FiniteLoop) -> Verdict {
    let orders: BTreeSet<usize> = (1..l.order())
        .filter_map(|x| {
            let g = l.closure([x]);
            (l.is_associative_on(&g)).then_some(g.len())
        })
        .collect();
    let missing = primes_of(l.order()).into_iter().find(|p| !orders.contains(p));
    Verdict::from_counterexample(missing.map(|p| vec![p]))
}

/// Normal subgroup in the sense `mA = Am` for every `m`.
pub fn is_normal_subgroup(l: &FiniteLoop, a: &SubLoop) -> bool {
    l.is_subgroup(a) && l.elements().all(|m| l.left_coset(m, a.elements()) == l.right_coset(a.elements(), m))
}

pub fn s_classical_report(l: &FiniteLoop, caps: &Caps) -> Result<SReport> {
    let census = all_subloops(l, caps)?;
    let subs = s_substructures_from(l, &census);
    let n = l.order();
    let witnesses: Vec<SubLoop> = census.subgroups().filter(|s| s.is_proper() && s.order() >= 2).cloned().collect();
    let normal_groups: Vec<SubLoop> = witnesses.iter().filter(|s| is_normal_subgroup(l, s)).cloned().collect();
    let s_loop = is_s_loop(l);

    let cauchy_bad = cyclic_subgroups(l).into_iter().find(|(_, g)| !divides(g.len(), n)).map(|(x, _)| vec![x]);
    let s_cauchy = match (&s_loop.holds, cauchy_bad) {
        (false, _) => Verdict::fail_bare(),
        (true, Some(w)) => Verdict::fail(w),
        (true, None) => Verdict::pass(),
    };
    let s_lagrange = first_failing(&witnesses, |s| divides(s.order(), n));
    let s_weakly_lagrange = first_passing(&witnesses, |s| divides(s.order(), n));
    let s_pseudo_lagrange = first_failing(&subs.s_subloops, |s| divides(s.order(), n));
    let s_weakly_pseudo_lagrange = first_passing(&subs.s_subloops, |s| divides(s.order(), n));
    let s_lagrange_criteria = if s_loop.holds { s_lagrange.clone() } else { Verdict::fail_bare() };
    let commutative = |s: &SubLoop| l.restrict(s).is_commutative();
    let cyclic = |s: &SubLoop| s.elements().iter().any(|&x| l.closure([x]).len() == s.order());
    let requires_s_loop = |v: Verdict| if s_loop.holds { v } else { Verdict::fail_bare() };
    let s_loop_ii = first_passing(&normal_groups, |_| true);
    let s_lagrange_criteria_ii =
        if s_loop_ii.holds { first_failing(&normal_groups, |s| divides(s.order(), n)) } else { Verdict::fail_bare() };
    let s_sylow_criteria_ii = if s_loop_ii.holds {
        let missing = primes_of(n).into_iter().find(|&p| !normal_groups.iter().any(|s| s.order() == p));
        Verdict::from_counterexample(missing.map(|p| vec![p]))
    } else {
        Verdict::fail_bare()
    };
    let flags = SFlags {
        s_simple: Verdict::from_counterexample(subs.s_normal_subloops.first().map(|s| s.elements().to_vec())),
        s_subgroup_loop: if subs.s_subgroup_loop {
            Verdict::pass()
        } else {
            Verdict::from_counterexample(Some(
                census
                    .subloops
                    .iter()
                    .zip(&census.subgroup)
                    .find(|(s, &g)| s.is_proper() && !g)
                    .map(|(s, _)| s.elements().to_vec())
                    .unwrap_or_default(),
            ))
        },
        s_cauchy,
        s_lagrange,
        s_weakly_lagrange,
        s_pseudo_lagrange,
        s_weakly_pseudo_lagrange,
        s_lagrange_criteria,
        s_sylow_criteria: s_sylow_criteria(l),
        s_commutative: first_passing(&witnesses, commutative),
        s_strongly_commutative: requires_s_loop(first_failing(&witnesses, commutative)),
        s_cyclic: first_passing(&witnesses, cyclic),
        s_strongly_cyclic: requires_s_loop(first_failing(&witnesses, cyclic)),
        s_loop_ii,
        s_lagrange_criteria_ii,
        s_sylow_criteria_ii,
    };
    Ok(SReport {
        is_s_loop: s_loop,
        witnesses,
        s_subloops: subs.s_subloops,
        s_normal_subloops: subs.s_normal_subloops,
        flags,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SPSylow {
    /// S-subloops of order `p`.
    pub s_p_sylow_subloops: Vec<SubLoop>,
    /// Pairs `(A, B)`: `A` an S-subloop whose order `p` divides, `B ⊂ A` a
    /// subgroup of order `p`.
    pub s_p_sylow_subgroup_pairs: Vec<(SubLoop, SubLoop)>,
    /// S-subgroup loop in which every proper subgroup of order at least 2
    /// has prime-power order dividing `|L|`.
    pub s_strong_p_sylow: bool,
}

pub fn s_p_sylow(l: &FiniteLoop, p: usize, caps: &Caps) -> Result<SPSylow> {
    let n = l.order();
    if p < 2 || factorize(p as u64) != vec![(p as u64, 1)] || !divides(p, n) {
        return Err(Error::NotPrime { p, order: n });
    }
    let census = all_subloops(l, caps)?;
    let subs = s_substructures_from(l, &census);
    let groups: Vec<&SubLoop> = census.subgroups().filter(|s| s.is_proper() && s.order() >= 2).collect();
    let s_p_sylow_subloops = subs.s_subloops.iter().filter(|s| s.order() == p).cloned().collect();
    let mut pairs = Vec::new();
    for a in subs.s_subloops.iter().filter(|a| divides(p, a.order())) {
        for b in groups.iter().filter(|b| b.order() == p && b.is_subset_of(a)) {
            pairs.push((a.clone(), (*b).clone()));
        }
    }
    let s_strong_p_sylow =
        subs.s_subgroup_loop && groups.iter().all(|g| is_prime_power(g.order()) && divides(g.order(), n));
    Ok(SPSylow { s_p_sylow_subloops, s_p_sylow_subgroup_pairs: pairs, s_strong_p_sylow })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelativeKind {
    Commutator,
    Associator,
    PseudoAssociator,
    StronglyPseudoAssociator,
    NucleusLeft,
    NucleusMiddle,
    NucleusRight,
    Nucleus,
    MoufangCentre,
    Centre,
    FirstNormalizer,
    SecondNormalizer,
}

/// A derived structure computed relative to the subloop `A`.
///
/// Commutator and associator: the subloop generated by the commutators or
/// associators of `L` that lie in `A`. Pseudo associator: `t ∈ A` over
/// associative triples of `A`; the strong form lets `t` range over `L`.
/// Nuclei and centres are computed inside `A`; normalizers range over `L`.
/// Pass `A = L` when `L` has no S-subloop.
pub fn relative_substructure(l: &FiniteLoop, a: &SubLoop, kind: RelativeKind) -> Result<Vec<Element>> {
    a.check_parent(l)?;
    let all: Vec<Element> = l.elements().collect();
    let on = a.elements();
    let inside = |set: Vec<Element>| -> Vec<Element> { l.closure(set.into_iter().filter(|&x| a.contains(x))).to_vec() };
    let out = match kind {
        RelativeKind::Commutator => inside(derived_generators(l, &all, DerivedKind::Commutator)),
        RelativeKind::Associator => inside(derived_generators(l, &all, DerivedKind::Associator)),
        RelativeKind::PseudoAssociator => inside(derived_generators(l, on, DerivedKind::PseudoAssociator)),
        RelativeKind::StronglyPseudoAssociator => {
            let mut hit = vec![false; l.order()];
            for &x in on {
                for &y in on {
                    for &z in on {
                        if l.mul(l.mul(x, y), z) != l.mul(x, l.mul(y, z)) {
                            continue;
                        }
                        for t in l.elements() {
                            if l.mul(l.mul(x, y), l.mul(t, z)) == l.mul(l.mul(x, t), l.mul(y, z)) {
                                hit[t] = true;
                            }
                        }
                    }
                }
            }
            l.closure(l.elements().filter(|&t| hit[t]))
        }
        RelativeKind::NucleusLeft => nucleus_within(l, on, NucleusPosition::Left).elements().to_vec(),
        RelativeKind::NucleusMiddle => nucleus_within(l, on, NucleusPosition::Middle).elements().to_vec(),
        RelativeKind::NucleusRight => nucleus_within(l, on, NucleusPosition::Right).elements().to_vec(),
        RelativeKind::Nucleus => nucleus_within(l, on, NucleusPosition::Full).elements().to_vec(),
        RelativeKind::MoufangCentre => commutant_within(l, on).subloop.elements().to_vec(),
        RelativeKind::Centre => centre_within(l, on).elements().to_vec(),
        RelativeKind::FirstNormalizer => first_normalizer(l, a),
        RelativeKind::SecondNormalizer => second_normalizer(l, a),
    };
    Ok(out)
}

/// Properties that can be asked of S-subloops.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SProperty {
    Law(Law),
    /// All three Moufang identities.
    Moufang,
    /// Contains distinct non-identity `x, y, z` with `x(yz) = (xy)z`.
    AssociativeTriple,
    /// `(xy)x = x(yx)` throughout.
    PairwiseAssociative,
    /// Diassociative, for loops that are not diassociative themselves.
    Diassociative,
    /// Power-associative, for loops that are not power-associative themselves.
    PowerAssociative,
    Arif,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exists,
    ForAll,
}

fn property_holds(l: &FiniteLoop, a: &FiniteLoop, prop: SProperty, caps: &Caps) -> bool {
    match prop {
        SProperty::Law(law) => check_law(a, law).holds,
        SProperty::Moufang => [Law::Moufang1, Law::Moufang2, Law::Moufang3].iter().all(|&m| check_law(a, m).holds),
        SProperty::AssociativeTriple => {
            let k = a.order();
            (1..k).any(|x| {
                (1..k).any(|y| {
                    (1..k).any(|z| x != y && y != z && x != z && a.mul(x, a.mul(y, z)) == a.mul(a.mul(x, y), z))
                })
            })
        }
        SProperty::PairwiseAssociative => check_law(a, Law::Flexible).holds,
        SProperty::Diassociative => !is_diassociative(l).holds && is_diassociative(a).holds,
        SProperty::PowerAssociative => !is_power_associative(l).holds && is_power_associative(a).holds,
        SProperty::Arif => matches!(is_arif(a, caps.mlt), Ok(v) if v.holds),
    }
}

/// Exists: some S-subloop has the property (witness: that subloop).
/// ForAll: every S-subloop has it (witness on failure: the first that does
/// not); vacuously true when there are no S-subloops.
pub fn s_law_check(l: &FiniteLoop, prop: SProperty, mode: Mode, caps: &Caps) -> Result<Verdict> {
    let subs = s_substructures(l, caps)?;
    let holds = |s: &SubLoop| property_holds(l, &l.restrict(s), prop, caps);
    Ok(match mode {
        Mode::Exists => first_passing(&subs.s_subloops, holds),
        Mode::ForAll => first_failing(&subs.s_subloops, holds),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TripleLaw {
    Bol,
    Moufang,
    Bruck,
}

fn triple_holds(l: &FiniteLoop, t: [Element; 3], law: TripleLaw) -> bool {
    match law {
        TripleLaw::Bol => law_holds_at(l, Law::Bol, &t).unwrap(),
        TripleLaw::Moufang => {
            [Law::Moufang1, Law::Moufang2, Law::Moufang3].iter().all(|&m| law_holds_at(l, m, &t).unwrap())
        }
        TripleLaw::Bruck => law_holds_at(l, Law::Bruck, &t).unwrap(),
    }
}

/// Evaluates the law at `(x, y, z)`, or at all six orderings when `strong`;
/// the witness on failure is the first failing ordering.
pub fn special_triple(l: &FiniteLoop, x: Element, y: Element, z: Element, law: TripleLaw, strong: bool) -> Verdict {
    let orders: Vec<[Element; 3]> =
        if strong { vec![[x, y, z], [x, z, y], [y, x, z], [y, z, x], [z, x, y], [z, y, x]] } else { vec![[x, y, z]] };
    Verdict::from_counterexample(orders.into_iter().find(|&t| !triple_holds(l, t, law)).map(|t| t.to_vec()))
}

/// Checks that `map` is a group homomorphism from the subgroup `A` of `L`
/// onto the subgroup `A2` of `L2`. With `level_ii` both must be normal.
///
/// The witness is `[x, y]` for a product that is not preserved, or `[z]`
/// for an element of `A2` outside the image.
pub fn s_homomorphism_check(
    l: &FiniteLoop,
    l2: &FiniteLoop,
    a: &SubLoop,
    a2: &SubLoop,
    map: &BTreeMap<Element, Element>,
    level_ii: bool,
) -> Result<Verdict> {
    a.check_parent(l)?;
    a2.check_parent(l2)?;
    if !l.is_subgroup(a) || !l2.is_subgroup(a2) {
        return Err(Error::NotASubgroup);
    }
    if level_ii {
        for (lp, s) in [(l, a), (l2, a2)] {
            if !is_normal_subgroup(lp, s) {
                return Err(Error::NotNormal { condition: 1, x: 0, y: 0 });
            }
        }
    }
    let f = |x: Element| map.get(&x).copied().filter(|y| a2.contains(*y));
    for &x in a.elements() {
        for &y in a.elements() {
            let ok = matches!((f(x), f(y), f(l.mul(x, y))), (Some(p), Some(q), Some(r)) if l2.mul(p, q) == r);
            if !ok {
                return Ok(Verdict::fail(vec![x, y]));
            }
        }
    }
    let image: BTreeSet<Element> = a.elements().iter().filter_map(|&x| f(x)).collect();
    Ok(match a2.elements().iter().find(|z| !image.contains(z)) {
        Some(&z) => Verdict::fail(vec![z]),
        None => Verdict::pass(),
    })
}

pub fn right_coset(l: &FiniteLoop, a: &SubLoop, m: Element) -> Vec<Element> {
    l.right_coset(a.elements(), m)
}

pub fn left_coset(l: &FiniteLoop, a: &SubLoop, m: Element) -> Vec<Element> {
    l.left_coset(m, a.elements())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// The distinct cosets of `A` on one side, in order of first representative.
pub fn cosets(l: &FiniteLoop, a: &SubLoop, side: Side) -> Vec<Vec<Element>> {
    let mut out: Vec<Vec<Element>> = Vec::new();
    for m in l.elements() {
        let c = match side {
            Side::Left => left_coset(l, a, m),
            Side::Right => right_coset(l, a, m),
        };
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

/// True when the distinct cosets are pairwise disjoint.
pub fn cosets_partition(l: &FiniteLoop, a: &SubLoop, side: Side) -> bool {
    let cs = cosets(l, a, side);
    cs.iter().map(|c| c.len()).sum::<usize>() == l.order()
}

/// One exact cover: `(representative, coset)` pairs.
pub type CosetCover = Vec<(Element, Vec<Element>)>;

/// Every way of covering `L` exactly by pairwise disjoint cosets of `A`.
///
/// Each solution lists the chosen cosets sorted, each coset named by its
/// smallest representative; solutions are in lexicographic order. Every
/// solution is inclusion-minimal since dropping a coset uncovers it.
pub fn coset_cover_search(l: &FiniteLoop, a: &SubLoop, side: Side, cap: usize) -> Result<Vec<CosetCover>> {
    if !l.is_subgroup(a) {
        return Err(Error::NotASubgroup);
    }
    let mut distinct: Vec<(Element, Vec<Element>)> = Vec::new();
    for m in l.elements() {
        let c = match side {
            Side::Left => left_coset(l, a, m),
            Side::Right => right_coset(l, a, m),
        };
        if !distinct.iter().any(|(_, d)| *d == c) {
            distinct.push((m, c));
        }
    }
    let mut solutions = Vec::new();
    let mut covered = vec![false; l.order()];
    let mut chosen = Vec::new();
    cover(&distinct, &mut covered, &mut chosen, &mut solutions, cap)?;
    solutions.sort();
    Ok(solutions)
}

fn cover(
    cosets: &[(Element, Vec<Element>)],
    covered: &mut Vec<bool>,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<(Element, Vec<Element>)>>,
    cap: usize,
) -> Result<()> {
    let Some(u) = covered.iter().position(|c| !c) else {
        if out.len() >= cap {
            return Err(Error::CapExceeded { what: "coset cover solutions", limit: cap });
        }
        let mut s: Vec<(Element, Vec<Element>)> = chosen.iter().map(|&i| cosets[i].clone()).collect();
        s.sort();
        out.push(s);
        return Ok(());
    };
    for (i, (_, c)) in cosets.iter().enumerate() {
        if c.contains(&u) && c.iter().all(|&x| !covered[x]) {
            for &x in c {
                covered[x] = true;
            }
            chosen.push(i);
            cover(cosets, covered, chosen, out, cap)?;
            chosen.pop();
            for &x in c {
                covered[x] = false;
            }
        }
    }
    Ok(())
}

/// `{(x·y, (x·y)·q)}` over all `x, y`.
pub fn hyperloop(l: &FiniteLoop, q: Element) -> BTreeSet<(Element, Element)> {
    l.elements()
        .flat_map(|x| l.elements().map(move |y| (x, y)))
        .map(|(x, y)| {
            let z = l.mul(x, y);
            (z, l.mul(z, q))
        })
        .collect()
}

/// `{(x·y, x·(y·q))}` over all `x, y`.
pub fn a_hyperloop(l: &FiniteLoop, q: Element) -> BTreeSet<(Element, Element)> {
    l.elements()
        .flat_map(|x| l.elements().map(move |y| (x, y)))
        .map(|(x, y)| (l.mul(x, y), l.mul(x, l.mul(y, q))))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HyperKind {
    Hyper,
    AHyper,
}

/// The hyperloop with `q` drawn from a supplied S-subloop (or S-subloop II).
pub fn s_hyperloop(l: &FiniteLoop, a: &SubLoop, q: Element, kind: HyperKind) -> Result<BTreeSet<(Element, Element)>> {
    a.check_parent(l)?;
    if !a.contains(q) {
        return Err(Error::QNotInSubloop(q));
    }
    Ok(match kind {
        HyperKind::Hyper => hyperloop(l, q),
        HyperKind::AHyper => a_hyperloop(l, q),
    })
}

/// True when the pair sets over all `q` are pairwise disjoint and cover
/// `L × L`; the witness on failure is `[q1, q2, z, w]` for a shared pair,
/// or `[z, w]` for an uncovered one.
pub fn hyper_partition_check(l: &FiniteLoop, kind: HyperKind) -> Verdict {
    let mut owner: BTreeMap<(Element, Element), Element> = BTreeMap::new();
    for q in l.elements() {
        let set = match kind {
            HyperKind::Hyper => hyperloop(l, q),
            HyperKind::AHyper => a_hyperloop(l, q),
        };
        for p in set {
            if let Some(&q0) = owner.get(&p) {
                return Verdict::fail(vec![q0, q, p.0, p.1]);
            }
            owner.insert(p, q);
        }
    }
    for z in l.elements() {
        for w in l.elements() {
            if !owner.contains_key(&(z, w)) {
                return Verdict::fail(vec![z, w]);
            }
        }
    }
    Verdict::pass()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loop_core::{cyclic_group, symmetric_group};

    #[test]
    fn trivial_loop_is_not_s_loop() {
        assert!(!is_s_loop(&cyclic_group(1).unwrap()).holds);
        assert!(hyper_partition_check(&cyclic_group(1).unwrap(), HyperKind::Hyper).holds);
    }

    #[test]
    fn group_cosets_partition() {
        let s3 = symmetric_group(3).unwrap();
        let a = s3.generated_subloop([1]);
        let covers = coset_cover_search(&s3, &a, Side::Right, 1000).unwrap();
        assert!(!covers.is_empty());
        assert!(cosets_partition(&s3, &a, Side::Right));
        assert!(cosets_partition(&s3, &a, Side::Left));
    }

    #[test]
    fn homomorphism_checks() {
        let z = cyclic_group(4).unwrap();
        let t = z.trivial();
        let id = BTreeMap::from([(0, 0)]);
        assert!(s_homomorphism_check(&z, &z, &t, &t, &id, false).unwrap().holds);
        let a = z.subloop(&[0, 2]).unwrap();
        let kill = BTreeMap::from([(0, 0), (2, 0)]);
        let v = s_homomorphism_check(&z, &z, &a, &a, &kill, true).unwrap();
        assert_eq!(v.witness, Some(vec![2]));
    }

    #[test]
    fn s3_triples() {
        let s3 = symmetric_group(3).unwrap();
        assert!(special_triple(&s3, 1, 2, 3, TripleLaw::Moufang, true).holds);
        assert!(special_triple(&s3, 0, 0, 0, TripleLaw::Bol, false).holds);
    }
}
