use super::{sorted, Element, FiniteLoop, SubLoop};
use crate::{Error, Result};

pub fn cyclic_group(k: usize) -> Result<FiniteLoop> {
    if k == 0 {
        return Err(Error::EmptyTable);
    }
    if k > super::MAX_ORDER {
        return Err(Error::SizeCapExceeded { what: "cyclic group order", limit: super::MAX_ORDER });
    }
    let flat = (0..k * k).map(|c| (c / k + c % k) % k).collect();
    Ok(FiniteLoop::from_flat_unchecked(k, flat, None))
}

/// The symmetric group on `k` points, elements in lexicographic order of
/// their one-line images (identity first). Product is `(σ·τ)(i) = τ(σ(i))`.
pub fn symmetric_group(k: usize) -> Result<FiniteLoop> {
    if k == 0 {
        return Err(Error::EmptyTable);
    }
    if k > 6 {
        return Err(Error::SizeCapExceeded { what: "symmetric group degree", limit: 6 });
    }
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        perms.push(cur.clone());
        if !next_permutation(&mut cur) {
            break;
        }
    }
    let index = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).unwrap();
    let n = perms.len();
    let mut flat = Vec::with_capacity(n * n);
    for s in &perms {
        for t in &perms {
            let prod: Vec<usize> = s.iter().map(|&i| t[i]).collect();
            flat.push(index(&prod));
        }
    }
    let labels = perms.iter().map(|p| p.iter().map(|i| (i + 1).to_string()).collect::<String>()).collect();
    Ok(FiniteLoop::from_flat_unchecked(n, flat, Some(labels)))
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Componentwise product; the pair `(a, b)` has index `a·|L2| + b`.
pub fn direct_product(l1: &FiniteLoop, l2: &FiniteLoop) -> Result<FiniteLoop> {
    let (n1, n2) = (l1.order(), l2.order());
    let n = n1 * n2;
    if n > super::MAX_ORDER {
        return Err(Error::TooLarge(n));
    }
    let mut flat = Vec::with_capacity(n * n);
    for x in 0..n {
        let (a, b) = (x / n2, x % n2);
        for y in 0..n {
            let (c, d) = (y / n2, y % n2);
            flat.push(l1.mul(a, c) * n2 + l2.mul(b, d));
        }
    }
    let labels = (0..n).map(|x| format!("({},{})", l1.label(x / n2), l2.label(x % n2))).collect();
    Ok(FiniteLoop::from_flat_unchecked(n, flat, Some(labels)))
}

/// First failing normality condition: 1 for `xN = Nx`, 2 for
/// `(Nx)y = N(xy)`, 3 for `y(xN) = (yx)N`.
pub(crate) fn normality_failure(l: &FiniteLoop, n: &SubLoop) -> Option<(u8, Element, Element)> {
    let h = n.elements();
    let right: Vec<Vec<Element>> = l.elements().map(|x| l.right_coset(h, x)).collect();
    let left: Vec<Vec<Element>> = l.elements().map(|x| l.left_coset(x, h)).collect();
    for x in l.elements() {
        if left[x] != right[x] {
            return Some((1, x, 0));
        }
    }
    for x in l.elements() {
        for y in l.elements() {
            let a = sorted(right[x].iter().map(|&z| l.mul(z, y)));
            if a != right[l.mul(x, y)] {
                return Some((2, x, y));
            }
        }
    }
    for x in l.elements() {
        for y in l.elements() {
            let a = sorted(left[x].iter().map(|&z| l.mul(y, z)));
            if a != left[l.mul(y, x)] {
                return Some((3, x, y));
            }
        }
    }
    None
}

/// The loop of cosets `N·x`, ordered by smallest member.
pub fn quotient_loop(l: &FiniteLoop, n: &SubLoop) -> Result<FiniteLoop> {
    n.check_parent(l)?;
    if let Some((condition, x, y)) = normality_failure(l, n) {
        return Err(Error::NotNormal { condition, x, y });
    }
    let mut coset_of = vec![usize::MAX; l.order()];
    let mut reps = Vec::new();
    for x in l.elements() {
        if coset_of[x] == usize::MAX {
            let c = reps.len();
            for z in l.right_coset(n.elements(), x) {
                coset_of[z] = c;
            }
            reps.push(x);
        }
    }
    let k = reps.len();
    let mut flat = vec![usize::MAX; k * k];
    for a in l.elements() {
        for b in l.elements() {
            let cell = &mut flat[coset_of[a] * k + coset_of[b]];
            let p = coset_of[l.mul(a, b)];
            if *cell == usize::MAX {
                *cell = p;
            } else if *cell != p {
                return Err(Error::IllDefinedCosetProduct);
            }
        }
    }
    let labels = Some(reps.iter().map(|&r| l.label(r)).collect());
    let rows: Vec<Vec<usize>> = flat.chunks(k).map(|r| r.to_vec()).collect();
    super::validate_loop(&rows, labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_groups() {
        let s3 = symmetric_group(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(s3.is_associative());
        assert!(!s3.is_commutative());
        assert_eq!(s3.label(0), "123");
        assert_eq!(symmetric_group(5).unwrap().order(), 120);
        assert!(matches!(symmetric_group(7), Err(Error::SizeCapExceeded { .. })));
    }

    #[test]
    fn trivial_cyclic() {
        let c = cyclic_group(1).unwrap();
        assert_eq!(c.order(), 1);
        assert_eq!(cyclic_group(7).unwrap().order(), 7);
    }

    #[test]
    fn klein_product() {
        let z2 = cyclic_group(2).unwrap();
        let v = direct_product(&z2, &z2).unwrap();
        assert_eq!(v.order(), 4);
        assert!(v.is_associative() && v.is_commutative());
        assert!(v.elements().all(|x| v.mul(x, x) == 0));
    }

    #[test]
    fn quotients() {
        let s3 = symmetric_group(3).unwrap();
        let a3 = s3.generated_subloop([3]);
        assert_eq!(a3.order(), 3);
        let q = quotient_loop(&s3, &a3).unwrap();
        assert_eq!(q.order(), 2);
        let t = quotient_loop(&s3, &s3.whole()).unwrap();
        assert_eq!(t.order(), 1);
        let same = quotient_loop(&s3, &s3.trivial()).unwrap();
        assert_eq!(same.rows(), s3.rows());
        let c2 = s3.generated_subloop([1]);
        assert!(matches!(quotient_loop(&s3, &c2), Err(Error::NotNormal { .. })));
    }
}
