use std::cmp::Ordering;

/// A monomial as a sparse exponent list `(variable index, exponent)`, sorted by
/// variable with no zero exponents. The empty list is the monomial 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(usize, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(index: usize) -> Self {
        Monomial(vec![(index, 1)])
    }

    /// Builds a monomial from arbitrary `(var, exp)` pairs, merging repeats
    /// and dropping zero exponents.
    pub fn from_exponents<I: IntoIterator<Item = (usize, u32)>>(pairs: I) -> Self {
        let mut v: Vec<(usize, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        v.sort_unstable_by_key(|&(i, _)| i);
        let mut out: Vec<(usize, u32)> = Vec::with_capacity(v.len());
        for (i, e) in v {
            match out.last_mut() {
                Some((j, f)) if *j == i => *f += e,
                _ => out.push((i, e)),
            }
        }
        Monomial(out)
    }

    /// Square-free monomial over the given variables.
    pub fn from_support<I: IntoIterator<Item = usize>>(vars: I) -> Self {
        Self::from_exponents(vars.into_iter().map(|i| (i, 1)))
    }

    pub fn exponents(&self) -> &[(usize, u32)] {
        &self.0
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.0.binary_search_by_key(&var, |&(i, _)| i).map(|k| self.0[k].1).unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_square_free(&self) -> bool {
        self.0.iter().all(|&(_, e)| e == 1)
    }

    pub fn support(&self) -> Vec<usize> {
        self.0.iter().map(|&(i, _)| i).collect()
    }

    /// Highest variable index plus one; 0 for the monomial 1.
    pub fn min_nvars(&self) -> usize {
        self.0.last().map_or(0, |&(i, _)| i + 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self | other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        let mut it = other.0.iter().peekable();
        'outer: for &(v, e) in &self.0 {
            while let Some(&&(w, f)) = it.peek() {
                it.next();
                match w.cmp(&v) {
                    Ordering::Less => continue,
                    Ordering::Equal if f >= e => continue 'outer,
                    _ => return false,
                }
            }
            return false;
        }
        true
    }

    /// `self / other`, assuming `other | self`.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(self.0.iter().map(|&(v, e)| (v, e - other.exponent(v))))
    }

    /// Renames variables through `map`; `None` entries must not occur in the support.
    pub fn reindex(&self, map: &[Option<usize>]) -> Option<Monomial> {
        let mut pairs = Vec::with_capacity(self.0.len());
        for &(v, e) in &self.0 {
            pairs.push((map.get(v).copied().flatten()?, e));
        }
        Some(Monomial::from_exponents(pairs))
    }
}

/// Graded lexicographic order with `x_0 > x_1 > ...`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (a, b) = (&self.0, &other.0);
            for k in 0..a.len().min(b.len()) {
                let ((va, ea), (vb, eb)) = (a[k], b[k]);
                if va != vb {
                    // the one carrying the smaller variable is larger
                    return vb.cmp(&va);
                }
                if ea != eb {
                    return ea.cmp(&eb);
                }
            }
            a.len().cmp(&b.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dense(m: &Monomial, n: usize) -> Vec<u32> {
        (0..n).map(|i| m.exponent(i)).collect()
    }

    #[test]
    fn divisibility() {
        let x1x2 = Monomial::from_support([0, 1]);
        let m = Monomial::from_exponents([(0, 2), (1, 1)]);
        assert!(x1x2.divides(&m));
        assert!(!m.divides(&x1x2));
        assert!(Monomial::one().divides(&m));
        assert!(!Monomial::var(2).divides(&m));
        assert_eq!(m.quotient(&x1x2), Monomial::var(0));
    }

    #[test]
    fn grlex_examples() {
        let x0 = Monomial::var(0);
        let x1 = Monomial::var(1);
        let x1sq = Monomial::from_exponents([(1, 2)]);
        let x0x2 = Monomial::from_support([0, 2]);
        assert!(x0 > x1);
        assert!(x1sq > x0);
        assert!(x0x2 > x1sq);
        assert!(Monomial::one() < x1);
    }

    proptest! {
        #[test]
        fn order_matches_dense_grlex(a in proptest::collection::vec(0u32..3, 4), b in proptest::collection::vec(0u32..3, 4)) {
            let ma = Monomial::from_exponents(a.iter().enumerate().map(|(i, &e)| (i, e)));
            let mb = Monomial::from_exponents(b.iter().enumerate().map(|(i, &e)| (i, e)));
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            let expected = da.cmp(&db).then_with(|| a.cmp(&b));
            prop_assert_eq!(ma.cmp(&mb), expected);
        }

        #[test]
        fn divides_matches_dense(a in proptest::collection::vec(0u32..3, 4), b in proptest::collection::vec(0u32..3, 4)) {
            let ma = Monomial::from_exponents(a.iter().enumerate().map(|(i, &e)| (i, e)));
            let mb = Monomial::from_exponents(b.iter().enumerate().map(|(i, &e)| (i, e)));
            let expected = a.iter().zip(&b).all(|(x, y)| x <= y);
            prop_assert_eq!(ma.divides(&mb), expected);
            let prod = ma.mul(&mb);
            let sum: Vec<u32> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
            prop_assert_eq!(dense(&prod, 4), sum);
        }
    }
}
