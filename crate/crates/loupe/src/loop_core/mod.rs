//! The finite-loop carrier: validation, divisions, associators, closures.

mod constructors;
mod iso;

pub(crate) use constructors::normality_failure as constructors_normality_failure;
pub use constructors::{cyclic_group, direct_product, quotient_loop, symmetric_group};
pub use iso::{find_isomorphism, IsoWitness};

use crate::{Error, Result};

/// An element index in `0..order`. Index 0 is always the identity.
pub type Element = usize;

const MAX_ORDER: usize = 1 << 16;

/// A finite loop given by its Cayley table, with the identity at index 0.
///
/// Division tables are precomputed so that `left_divide` and
/// `right_divide` are lookups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLoop {
    size: usize,
    table: Vec<u16>,
    ldiv: Vec<u16>,
    rdiv: Vec<u16>,
    labels: Option<Vec<String>>,
}

/// Outcome of [`FiniteLoop::element_order`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElementOrder {
    /// `x` generates a cyclic group in which `x` has this order.
    Order(usize),
    /// Left- and right-nested powers of `x` disagree at this exponent.
    Ambiguous { exponent: usize, left: Element, right: Element },
    /// Powers agree but `<x>` is not an abelian group; the triple or pair
    /// inside `<x>` breaks associativity or commutativity.
    NotCyclic { witness: [Element; 3] },
}

/// Validates a table and returns the certified loop.
///
/// If the identity is not at index 0 the elements are relabelled by
/// swapping it into place; the original indices survive as labels.
pub fn validate_loop(rows: &[Vec<usize>], labels: Option<Vec<String>>) -> Result<FiniteLoop> {
    let size = rows.len();
    if size == 0 {
        return Err(Error::EmptyTable);
    }
    if size > MAX_ORDER {
        return Err(Error::TooLarge(size));
    }
    for (row, r) in rows.iter().enumerate() {
        if r.len() != size {
            return Err(Error::NotSquare { row, len: r.len(), size });
        }
        if let Some((col, &value)) = r.iter().enumerate().find(|(_, &v)| v >= size) {
            return Err(Error::EntryOutOfRange { row, col, value, size });
        }
    }
    if let Some(l) = &labels {
        if l.len() != size {
            return Err(Error::LabelCount { expected: size, got: l.len() });
        }
    }
    let mut seen = vec![usize::MAX; size];
    for (i, r) in rows.iter().enumerate() {
        for &v in r {
            if seen[v] == i {
                return Err(Error::LatinRowViolation(i));
            }
            seen[v] = i;
        }
    }
    seen.fill(usize::MAX);
    for j in 0..size {
        for r in rows {
            let v = r[j];
            if seen[v] == j {
                return Err(Error::LatinColumnViolation(j));
            }
            seen[v] = j;
        }
    }
    let id = (0..size).find(|&k| (0..size).all(|x| rows[k][x] == x && rows[x][k] == x)).ok_or(Error::NoIdentity)?;
    let flat: Vec<usize> = if id == 0 {
        rows.iter().flatten().copied().collect()
    } else {
        let swap = |x: usize| {
            if x == 0 {
                id
            } else if x == id {
                0
            } else {
                x
            }
        };
        let mut t = vec![0; size * size];
        for i in 0..size {
            for j in 0..size {
                t[swap(i) * size + swap(j)] = swap(rows[i][j]);
            }
        }
        t
    };
    let labels = if id == 0 {
        labels
    } else {
        let mut l = labels.unwrap_or_else(|| (0..size).map(|i| i.to_string()).collect());
        l.swap(0, id);
        Some(l)
    };
    Ok(FiniteLoop::from_flat_unchecked(size, flat, labels))
}

impl FiniteLoop {
    /// Builds a loop from a row-major table already known to be a loop with
    /// identity 0.
    pub(crate) fn from_flat_unchecked(size: usize, flat: Vec<usize>, labels: Option<Vec<String>>) -> Self {
        debug_assert!(size <= MAX_ORDER);
        let table: Vec<u16> = flat.iter().map(|&v| v as u16).collect();
        let mut ldiv = vec![0u16; size * size];
        let mut rdiv = vec![0u16; size * size];
        for a in 0..size {
            for x in 0..size {
                let b = table[a * size + x] as usize;
                ldiv[a * size + b] = x as u16;
                let b = table[x * size + a] as usize;
                rdiv[a * size + b] = x as u16;
            }
        }
        FiniteLoop { size, table, ldiv, rdiv, labels }
    }

    /// Builds a loop from a product function, validating the result.
    pub fn from_fn(size: usize, labels: Option<Vec<String>>, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let rows: Vec<Vec<usize>> = (0..size).map(|i| (0..size).map(|j| f(i, j)).collect()).collect();
        validate_loop(&rows, labels)
    }

    pub fn order(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.size
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.size).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: Element) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn with_labels(mut self, labels: Option<Vec<String>>) -> Result<Self> {
        if let Some(l) = &labels {
            if l.len() != self.size {
                return Err(Error::LabelCount { expected: self.size, got: l.len() });
            }
        }
        self.labels = labels;
        Ok(self)
    }

    /// Looks up an element by its display label, falling back to a numeric index.
    pub fn element_by_label(&self, s: &str) -> Option<Element> {
        if let Some(l) = &self.labels {
            if let Some(i) = l.iter().position(|x| x == s) {
                return Some(i);
            }
        }
        s.parse().ok().filter(|&i| i < self.size)
    }

    #[inline]
    pub fn mul(&self, x: Element, y: Element) -> Element {
        self.table[x * self.size + y] as usize
    }

    /// The unique `x` with `a·x = b`.
    #[inline]
    pub fn left_divide(&self, a: Element, b: Element) -> Element {
        self.ldiv[a * self.size + b] as usize
    }

    /// The unique `y` with `y·a = b`.
    #[inline]
    pub fn right_divide(&self, a: Element, b: Element) -> Element {
        self.rdiv[a * self.size + b] as usize
    }

    pub fn two_sided_inverse(&self, x: Element) -> Option<Element> {
        let r = self.left_divide(x, 0);
        (self.right_divide(x, 0) == r).then_some(r)
    }

    /// The `w` with `(xy)z = (x(yz))w`.
    pub fn associator(&self, x: Element, y: Element, z: Element) -> Element {
        let lhs = self.mul(self.mul(x, y), z);
        let rhs = self.mul(x, self.mul(y, z));
        self.left_divide(rhs, lhs)
    }

    /// The `w` with `xy = (yx)w`.
    pub fn commutator(&self, x: Element, y: Element) -> Element {
        self.left_divide(self.mul(y, x), self.mul(x, y))
    }

    /// Sorted multiplicative closure of `seed ∪ {e}`.
    pub fn closure<I: IntoIterator<Item = Element>>(&self, seed: I) -> Vec<Element> {
        let mut member = vec![false; self.size];
        let mut list = vec![0];
        member[0] = true;
        for s in seed {
            if !member[s] {
                member[s] = true;
                list.push(s);
            }
        }
        let mut i = 0;
        while i < list.len() {
            let x = list[i];
            for j in 0..=i {
                let y = list[j];
                for p in [self.mul(x, y), self.mul(y, x)] {
                    if !member[p] {
                        member[p] = true;
                        list.push(p);
                    }
                }
            }
            i += 1;
        }
        list.sort_unstable();
        list
    }

    pub fn generated_subloop<I: IntoIterator<Item = Element>>(&self, seed: I) -> SubLoop {
        SubLoop { elements: self.closure(seed), parent_size: self.size }
    }

    /// Certifies an explicit element set as a subloop.
    pub fn subloop(&self, elements: &[Element]) -> Result<SubLoop> {
        let mut els: Vec<Element> = elements.to_vec();
        els.push(0);
        els.sort_unstable();
        els.dedup();
        if let Some(&bad) = els.iter().find(|&&x| x >= self.size) {
            return Err(Error::ElementOutOfRange(bad));
        }
        let mut member = vec![false; self.size];
        for &x in &els {
            member[x] = true;
        }
        for &x in &els {
            for &y in &els {
                let p = self.mul(x, y);
                if !member[p] {
                    return Err(Error::NotClosed { x, y, product: p });
                }
            }
        }
        Ok(SubLoop { elements: els, parent_size: self.size })
    }

    pub fn whole(&self) -> SubLoop {
        SubLoop { elements: self.elements().collect(), parent_size: self.size }
    }

    pub fn trivial(&self) -> SubLoop {
        SubLoop { elements: vec![0], parent_size: self.size }
    }

    /// True when the product restricted to `s` is associative.
    pub fn is_subgroup(&self, s: &SubLoop) -> bool {
        self.is_associative_on(s.elements())
    }

    pub(crate) fn is_associative_on(&self, els: &[Element]) -> bool {
        self.associativity_counterexample(els).is_none()
    }

    pub(crate) fn associativity_counterexample(&self, els: &[Element]) -> Option<[Element; 3]> {
        for &x in els {
            for &y in els {
                let xy = self.mul(x, y);
                for &z in els {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return Some([x, y, z]);
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_counterexample(&self.elements().collect::<Vec<_>>()).is_none()
    }

    pub fn is_commutative(&self) -> bool {
        self.elements().all(|x| (0..x).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn element_order(&self, x: Element) -> ElementOrder {
        let gen = self.closure([x]);
        let mut left = x;
        let mut right = x;
        for exponent in 2..=gen.len() + 1 {
            left = self.mul(left, x);
            right = self.mul(x, right);
            if left != right {
                return ElementOrder::Ambiguous { exponent, left, right };
            }
        }
        if let Some(w) = self.associativity_counterexample(&gen) {
            return ElementOrder::NotCyclic { witness: w };
        }
        for &a in &gen {
            for &b in &gen {
                if self.mul(a, b) != self.mul(b, a) {
                    return ElementOrder::NotCyclic { witness: [a, b, a] };
                }
            }
        }
        ElementOrder::Order(gen.len())
    }

    /// The loop induced on a subloop, with elements renumbered in sorted
    /// order and the parent's labels carried over.
    pub fn restrict(&self, s: &SubLoop) -> FiniteLoop {
        let els = s.elements();
        let mut pos = vec![usize::MAX; self.size];
        for (k, &x) in els.iter().enumerate() {
            pos[x] = k;
        }
        let k = els.len();
        let mut flat = Vec::with_capacity(k * k);
        for &x in els {
            for &y in els {
                flat.push(pos[self.mul(x, y)]);
            }
        }
        let labels = Some(els.iter().map(|&x| self.label(x)).collect());
        FiniteLoop::from_flat_unchecked(k, flat, labels)
    }

    /// Left coset `x·S` as a sorted set.
    pub fn left_coset(&self, x: Element, s: &[Element]) -> Vec<Element> {
        sorted(s.iter().map(|&h| self.mul(x, h)))
    }

    /// Right coset `S·x` as a sorted set.
    pub fn right_coset(&self, s: &[Element], x: Element) -> Vec<Element> {
        sorted(s.iter().map(|&h| self.mul(h, x)))
    }
}

pub(crate) fn sorted<I: IntoIterator<Item = Element>>(it: I) -> Vec<Element> {
    let mut v: Vec<Element> = it.into_iter().collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// A subset of a parent loop certified closed under the parent's product.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubLoop {
    elements: Vec<Element>,
    parent_size: usize,
}

impl SubLoop {
    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn parent_size(&self) -> usize {
        self.parent_size
    }

    pub fn contains(&self, x: Element) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &SubLoop) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn is_proper(&self) -> bool {
        self.elements.len() < self.parent_size
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn mask(&self) -> Vec<bool> {
        let mut m = vec![false; self.parent_size];
        for &x in &self.elements {
            m[x] = true;
        }
        m
    }

    /// Intersection of two subloops of the same parent.
    pub fn meet(&self, other: &SubLoop) -> SubLoop {
        let elements = self.elements.iter().copied().filter(|&x| other.contains(x)).collect();
        SubLoop { elements, parent_size: self.parent_size }
    }

    pub(crate) fn from_sorted_unchecked(elements: Vec<Element>, parent_size: usize) -> SubLoop {
        SubLoop { elements, parent_size }
    }

    pub fn check_parent(&self, l: &FiniteLoop) -> Result<()> {
        if self.parent_size == l.order() {
            Ok(())
        } else {
            Err(Error::ForeignSubloop(l.order()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(k: usize) -> FiniteLoop {
        cyclic_group(k).unwrap()
    }

    #[test]
    fn relocates_identity() {
        // Z_3 written with 2 as identity.
        let rows = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let l = validate_loop(&rows, None).unwrap();
        assert_eq!(l.mul(0, 1), 1);
        assert_eq!(l.label(0), "2");
        assert_eq!(l.label(2), "0");
        assert!(l.is_associative());
    }

    #[test]
    fn rejects_bad_tables() {
        assert_eq!(validate_loop(&[], None), Err(Error::EmptyTable));
        let rows = vec![vec![0, 1], vec![1, 1]];
        assert_eq!(validate_loop(&rows, None), Err(Error::LatinRowViolation(1)));
        let rows = vec![vec![0, 1], vec![0, 1]];
        assert_eq!(validate_loop(&rows, None), Err(Error::LatinColumnViolation(0)));
        let rows = vec![vec![1, 0], vec![0, 1]];
        assert!(validate_loop(&rows, None).is_ok());
        let rows = vec![vec![1, 2, 0], vec![0, 1, 2], vec![2, 0, 1]];
        assert_eq!(validate_loop(&rows, None), Err(Error::NoIdentity));
        let rows = vec![vec![0, 5], vec![1, 0]];
        assert!(matches!(validate_loop(&rows, None), Err(Error::EntryOutOfRange { .. })));
    }

    #[test]
    fn divisions_and_inverses() {
        let l = z(5);
        assert_eq!(l.left_divide(2, 1), 4);
        assert_eq!(l.right_divide(2, 1), 4);
        assert_eq!(l.two_sided_inverse(2), Some(3));
        assert_eq!(l.associator(1, 2, 3), 0);
        assert_eq!(l.commutator(1, 3), 0);
    }

    #[test]
    fn closure_and_orders() {
        let l = z(6);
        assert_eq!(l.closure([2]), vec![0, 2, 4]);
        assert_eq!(l.closure([]), vec![0]);
        assert_eq!(l.element_order(2), ElementOrder::Order(3));
        assert_eq!(l.element_order(0), ElementOrder::Order(1));
        assert!(l.subloop(&[0, 3]).is_ok());
        assert!(matches!(l.subloop(&[1]), Err(Error::NotClosed { .. })));
    }

    #[test]
    fn restriction_keeps_labels() {
        let l = z(4);
        let s = l.subloop(&[0, 2]).unwrap();
        let r = l.restrict(&s);
        assert_eq!(r.order(), 2);
        assert_eq!(r.label(1), "2");
        assert_eq!(r.mul(1, 1), 0);
    }
}
