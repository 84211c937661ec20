use super::{Element, FiniteLoop};

/// An isomorphism given by its images: `mapping[x]` is the image of `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    pub mapping: Vec<Element>,
}

impl IsoWitness {
    pub fn verify(&self, a: &FiniteLoop, b: &FiniteLoop) -> bool {
        let m = &self.mapping;
        if m.len() != a.order() || a.order() != b.order() || m[0] != 0 {
            return false;
        }
        let mut hit = vec![false; m.len()];
        for &y in m {
            if y >= m.len() || std::mem::replace(&mut hit[y], true) {
                return false;
            }
        }
        a.elements().all(|x| a.elements().all(|y| m[a.mul(x, y)] == b.mul(m[x], m[y])))
    }

    pub fn inverse(&self) -> IsoWitness {
        let mut inv = vec![0; self.mapping.len()];
        for (x, &y) in self.mapping.iter().enumerate() {
            inv[y] = x;
        }
        IsoWitness { mapping: inv }
    }

    pub fn then(&self, next: &IsoWitness) -> IsoWitness {
        IsoWitness { mapping: self.mapping.iter().map(|&y| next.mapping[y]).collect() }
    }
}

/// Per-element isomorphism invariant: size of `<x>`, cycle type of the
/// right and left translations, and whether `x` is an involution.
fn invariants(l: &FiniteLoop) -> Vec<(usize, bool, Vec<usize>, Vec<usize>)> {
    let n = l.order();
    let cycle_type = |f: &dyn Fn(Element) -> Element| {
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for s in 0..n {
            let mut x = s;
            let mut len = 0;
            while !seen[x] {
                seen[x] = true;
                x = f(x);
                len += 1;
            }
            if len > 0 {
                lens.push(len);
            }
        }
        lens.sort_unstable();
        lens
    };
    l.elements()
        .map(|a| (l.closure([a]).len(), l.mul(a, a) == 0, cycle_type(&|x| l.mul(x, a)), cycle_type(&|x| l.mul(a, x))))
        .collect()
}

#[derive(Clone)]
struct Partial {
    map: Vec<Option<Element>>,
    used: Vec<bool>,
    domain: Vec<Element>,
    cursor: usize,
}

impl Partial {
    fn assign(&mut self, x: Element, y: Element) -> bool {
        match self.map[x] {
            Some(z) => z == y,
            None => {
                if self.used[y] {
                    return false;
                }
                self.map[x] = Some(y);
                self.used[y] = true;
                self.domain.push(x);
                true
            }
        }
    }

    /// Extends the map to the closure of its domain, failing on conflict.
    fn propagate(&mut self, a: &FiniteLoop, b: &FiniteLoop) -> bool {
        while self.cursor < self.domain.len() {
            let i = self.cursor;
            let x = self.domain[i];
            for j in 0..=i {
                let y = self.domain[j];
                let (fx, fy) = (self.map[x].unwrap(), self.map[y].unwrap());
                if !self.assign(a.mul(x, y), b.mul(fx, fy)) || !self.assign(a.mul(y, x), b.mul(fy, fx)) {
                    return false;
                }
            }
            self.cursor += 1;
        }
        true
    }
}

/// Backtracking isomorphism search over images of a greedy generating
/// sequence. Generators are the smallest elements outside the closure of
/// the previous ones and candidates are tried in ascending order, so the
/// witness returned is the lexicographically smallest mapping.
pub fn find_isomorphism(a: &FiniteLoop, b: &FiniteLoop) -> Option<IsoWitness> {
    let n = a.order();
    if n != b.order() {
        return None;
    }
    let (ia, ib) = (invariants(a), invariants(b));
    let mut sa = ia.clone();
    let mut sb = ib.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return None;
    }
    let mut gens = Vec::new();
    let mut covered = a.closure([]);
    while covered.len() < n {
        let g = (0..n).find(|x| covered.binary_search(x).is_err()).unwrap();
        gens.push(g);
        covered = a.closure(gens.iter().copied());
    }
    let mut start = Partial { map: vec![None; n], used: vec![false; n], domain: Vec::new(), cursor: 0 };
    start.assign(0, 0);
    if !start.propagate(a, b) {
        return None;
    }
    search(a, b, &ia, &ib, &gens, start)
}

fn search(
    a: &FiniteLoop,
    b: &FiniteLoop,
    ia: &[(usize, bool, Vec<usize>, Vec<usize>)],
    ib: &[(usize, bool, Vec<usize>, Vec<usize>)],
    gens: &[Element],
    state: Partial,
) -> Option<IsoWitness> {
    let Some((&g, rest)) = gens.split_first() else {
        let mapping: Vec<Element> = state.map.iter().map(|m| m.unwrap()).collect();
        let w = IsoWitness { mapping };
        return w.verify(a, b).then_some(w);
    };
    if state.map[g].is_some() {
        return search(a, b, ia, ib, rest, state);
    }
    for y in b.elements() {
        if state.used[y] || ia[g] != ib[y] {
            continue;
        }
        let mut next = state.clone();
        next.assign(g, y);
        if next.propagate(a, b) {
            if let Some(w) = search(a, b, ia, ib, rest, next) {
                return Some(w);
            }
        }
    }
    None
}
