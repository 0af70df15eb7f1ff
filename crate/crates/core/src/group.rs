//! Finite groups as Cayley tables.

use std::collections::{BTreeSet, VecDeque};
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::report::{expect, holds, CheckReport, Checker, LawSink, Scan};

/// A finite group written additively. Elements are `0..order`, element 0 is
/// the zero. The group laws are *not* assumed: [`GroupTable::validate`]
/// checks them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    name: String,
    order: usize,
    add: Vec<usize>,
    neg: Vec<usize>,
}

pub(crate) fn check_entries(what: &str, values: &[usize], order: usize) -> Result<()> {
    for (position, &value) in values.iter().enumerate() {
        if value >= order {
            return Err(Error::OutOfRange {
                what: what.to_owned(),
                position,
                value,
                order,
            });
        }
    }
    Ok(())
}

/// Flattens a row-major square or rectangular table, checking its shape and
/// entry range.
pub(crate) fn flatten(
    what: &str,
    rows: Vec<Vec<usize>>,
    n_rows: usize,
    n_cols: usize,
    order: usize,
) -> Result<Vec<usize>> {
    if rows.len() != n_rows {
        return Err(Error::Dimension {
            what: format!("{what} rows"),
            expected: n_rows,
            found: rows.len(),
        });
    }
    let mut flat = Vec::with_capacity(n_rows * n_cols);
    for (r, row) in rows.into_iter().enumerate() {
        if row.len() != n_cols {
            return Err(Error::Dimension {
                what: format!("{what} row {r}"),
                expected: n_cols,
                found: row.len(),
            });
        }
        flat.extend(row);
    }
    check_entries(what, &flat, order)?;
    Ok(flat)
}

pub(crate) fn unflatten(flat: &[usize], n_cols: usize) -> Vec<Vec<usize>> {
    if n_cols == 0 {
        return Vec::new();
    }
    flat.chunks(n_cols).map(<[usize]>::to_vec).collect()
}

impl GroupTable {
    /// Builds a table from rows, checking only dimensions and ranges.
    pub fn new(name: impl Into<String>, add: Vec<Vec<usize>>, neg: Vec<usize>) -> Result<Self> {
        let order = add.len();
        if order == 0 {
            return Err(Error::EmptyCarrier);
        }
        let add = flatten("add", add, order, order, order)?;
        if neg.len() != order {
            return Err(Error::Dimension {
                what: "neg".into(),
                expected: order,
                found: neg.len(),
            });
        }
        check_entries("neg", &neg, order)?;
        Ok(GroupTable {
            name: name.into(),
            order,
            add,
            neg,
        })
    }

    pub(crate) fn from_flat(name: String, order: usize, add: Vec<usize>, neg: Vec<usize>) -> Self {
        debug_assert_eq!(add.len(), order * order);
        debug_assert_eq!(neg.len(), order);
        GroupTable {
            name,
            order,
            add,
            neg,
        }
    }

    pub fn trivial() -> Self {
        Self::cyclic(1).renamed("trivial")
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order 0");
        let add = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        let neg = (0..n).map(|g| (n - g) % n).collect();
        Self::from_flat(format!("Z{n}"), n, add, neg)
    }

    pub fn klein_four() -> Self {
        let add = (0..16).map(|k| (k / 4) ^ (k % 4)).collect();
        Self::from_flat("V4".into(), 4, add, (0..4).collect())
    }

    /// Symmetric group on `n` points, elements ordered lexicographically as
    /// permutations.
    pub fn symmetric(n: usize) -> Self {
        assert!(n > 0);
        let mut gens = Vec::new();
        if n > 1 {
            let mut swap: Vec<usize> = (0..n).collect();
            swap.swap(0, 1);
            gens.push(swap);
            gens.push((0..n).map(|i| (i + 1) % n).collect());
        }
        Self::from_permutations(format!("S{n}"), n, &gens)
    }

    /// Dihedral group of the regular `n`-gon (order `2n`), `n >= 3`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 3);
        let rotation = (0..n).map(|i| (i + 1) % n).collect();
        let reflection = (0..n).map(|i| (n - i) % n).collect();
        Self::from_permutations(format!("D{n}"), n, &[rotation, reflection])
    }

    /// Group generated by permutations of `0..points`. Elements are sorted
    /// lexicographically (so the identity is element 0) and `g + h` means
    /// "apply `g`, then `h`".
    pub fn from_permutations(name: impl Into<String>, points: usize, gens: &[Vec<usize>]) -> Self {
        let identity: Vec<usize> = (0..points).collect();
        let mut seen = BTreeSet::from([identity.clone()]);
        let mut queue = VecDeque::from([identity]);
        while let Some(p) = queue.pop_front() {
            for g in gens {
                let q: Vec<usize> = p.iter().map(|&x| g[x]).collect();
                if seen.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
        let elems: Vec<Vec<usize>> = seen.into_iter().collect();
        let index = |p: &Vec<usize>| elems.binary_search(p).expect("closed under composition");
        let n = elems.len();
        let mut add = vec![0; n * n];
        for (i, p) in elems.iter().enumerate() {
            for (j, q) in elems.iter().enumerate() {
                let pq: Vec<usize> = p.iter().map(|&x| q[x]).collect();
                add[i * n + j] = index(&pq);
            }
        }
        let neg = elems
            .iter()
            .map(|p| {
                let mut inv = vec![0; points];
                for (x, &y) in p.iter().enumerate() {
                    inv[y] = x;
                }
                index(&inv)
            })
            .collect();
        Self::from_flat(name.into(), n, add, neg)
    }

    /// Pairs `(g, h)` encoded as `g * |H| + h`.
    pub fn direct_product(g: &GroupTable, h: &GroupTable) -> Self {
        let (n, m) = (g.order, h.order);
        let size = n * m;
        let mut add = vec![0; size * size];
        for x in 0..size {
            for y in 0..size {
                let (x1, x2) = (x / m, x % m);
                let (y1, y2) = (y / m, y % m);
                add[x * size + y] = g.add(x1, y1) * m + h.add(x2, y2);
            }
        }
        let neg = (0..size).map(|x| g.neg(x / m) * m + h.neg(x % m)).collect();
        Self::from_flat(format!("{}x{}", g.name, h.name), size, add, neg)
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn add(&self, g: usize, h: usize) -> usize {
        self.add[g * self.order + h]
    }

    #[inline]
    pub fn neg(&self, g: usize) -> usize {
        self.neg[g]
    }

    /// `g - h`, i.e. `g + (-h)`.
    #[inline]
    pub fn sub(&self, g: usize, h: usize) -> usize {
        self.add(g, self.neg(h))
    }

    /// `-h + g + h`.
    #[inline]
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.add(self.add(self.neg(h), g), h)
    }

    pub fn add_rows(&self) -> Vec<Vec<usize>> {
        unflatten(&self.add, self.order)
    }

    pub fn neg_vec(&self) -> &[usize] {
        &self.neg
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|g| (0..g).all(|h| self.add(g, h) == self.add(h, g)))
    }

    /// Associativity, two-sided identity and two-sided inverses.
    pub fn scan_laws(&self, sink: &mut dyn LawSink) -> Scan {
        let n = self.order;
        for x in 0..n {
            for y in 0..n {
                let xy = self.add(x, y);
                for z in 0..n {
                    expect(
                        sink,
                        self.add(xy, z) == self.add(x, self.add(y, z)),
                        "assoc",
                        &[x, y, z],
                    )?;
                }
            }
        }
        for x in 0..n {
            expect(
                sink,
                self.add(0, x) == x && self.add(x, 0) == x,
                "identity",
                &[x],
            )?;
        }
        for x in 0..n {
            let nx = self.neg(x);
            expect(
                sink,
                self.add(x, nx) == 0 && self.add(nx, x) == 0,
                "inverse",
                &[x],
            )?;
        }
        ControlFlow::Continue(())
    }

    pub fn validate(&self) -> CheckReport {
        Checker::default().run(|s| self.scan_laws(s))
    }

    pub fn is_group(&self) -> bool {
        holds(|s| self.scan_laws(s))
    }

    /// Subgroup generated by `seed`. In a finite group the monoid generated
    /// by `seed` is already closed under negation.
    pub fn subgroup_closure(&self, seed: &[usize]) -> Vec<bool> {
        let mut members = vec![false; self.order];
        members[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &s in seed {
                let y = self.add(x, s);
                if !members[y] {
                    members[y] = true;
                    queue.push_back(y);
                }
            }
        }
        members
    }

    /// A generating set chosen greedily in ascending element order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.subgroup_closure(&[]);
        for g in 1..self.order {
            if !span[g] {
                gens.push(g);
                span = self.subgroup_closure(&gens);
            }
        }
        gens
    }

    /// All group homomorphisms `self -> target`, as image vectors, in
    /// lexicographic order of the images of the generators.
    pub fn homomorphisms_to(&self, target: &GroupTable) -> Vec<Vec<usize>> {
        let gens = self.generators();
        let mut out = Vec::new();
        let mut images = vec![0usize; gens.len()];
        loop {
            if let Some(map) = self.extend_homomorphism(target, &gens, &images) {
                out.push(map);
            }
            // odometer over generator images, last generator fastest
            let mut k = gens.len();
            loop {
                if k == 0 {
                    out.sort();
                    return out;
                }
                k -= 1;
                images[k] += 1;
                if images[k] < target.order {
                    break;
                }
                images[k] = 0;
            }
        }
    }

    /// Extends generator images to a map by breadth-first closure and checks
    /// that the result is additive.
    fn extend_homomorphism(
        &self,
        target: &GroupTable,
        gens: &[usize],
        images: &[usize],
    ) -> Option<Vec<usize>> {
        const UNSET: usize = usize::MAX;
        let mut map = vec![UNSET; self.order];
        map[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (&g, &img) in gens.iter().zip(images) {
                let y = self.add(x, g);
                let fy = target.add(map[x], img);
                if map[y] == UNSET {
                    map[y] = fy;
                    queue.push_back(y);
                } else if map[y] != fy {
                    return None;
                }
            }
        }
        let n = self.order;
        for x in 0..n {
            for y in 0..n {
                if map[self.add(x, y)] != target.add(map[x], map[y]) {
                    return None;
                }
            }
        }
        Some(map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_group(g: &GroupTable) -> bool {
        let n = g.order();
        (0..n)
            .all(|x| (0..n).all(|y| (0..n).all(|z| g.add(g.add(x, y), z) == g.add(x, g.add(y, z)))))
            && (0..n).all(|x| g.add(0, x) == x && g.add(x, 0) == x && g.add(x, g.neg(x)) == 0)
    }

    #[test]
    fn z2_is_a_group() {
        let z2 = GroupTable::new("Z2", vec![vec![0, 1], vec![1, 0]], vec![0, 1]).unwrap();
        assert!(z2.validate().ok);
        assert_eq!(z2, GroupTable::cyclic(2));
    }

    #[test]
    fn missing_inverse_is_reported() {
        let g = GroupTable::new("bad", vec![vec![0, 1], vec![1, 1]], vec![0, 1]).unwrap();
        let r = g.validate();
        assert!(!r.ok);
        assert_eq!(r.failed_laws(), vec!["inverse"]);
        assert_eq!(r.witnesses("inverse").collect::<Vec<_>>(), vec![&[1][..]]);
    }

    #[test]
    fn s3_table_passes_all_216_triples() {
        let s3 = GroupTable::symmetric(3);
        assert_eq!(s3.order(), 6);
        assert!(brute_force_group(&s3));
        assert!(s3.validate().ok);
        assert!(!s3.is_abelian());
    }

    #[test]
    fn structural_errors_are_not_law_failures() {
        assert!(matches!(
            GroupTable::new("x", vec![vec![0, 1], vec![1]], vec![0, 1]),
            Err(Error::Dimension { .. })
        ));
        assert!(matches!(
            GroupTable::new("x", vec![vec![0, 2], vec![1, 0]], vec![0, 1]),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            GroupTable::new("x", vec![], vec![]),
            Err(Error::EmptyCarrier)
        ));
    }

    #[test]
    fn standard_constructors_are_groups() {
        for g in [
            GroupTable::trivial(),
            GroupTable::cyclic(5),
            GroupTable::klein_four(),
            GroupTable::symmetric(3),
            GroupTable::dihedral(4),
            GroupTable::direct_product(&GroupTable::cyclic(2), &GroupTable::cyclic(4)),
        ] {
            assert!(brute_force_group(&g), "{}", g.name());
        }
        assert_eq!(GroupTable::dihedral(4).order(), 8);
    }

    #[test]
    fn homomorphism_counts() {
        // |Hom(Z_m, Z_n)| = gcd(m, n)
        assert_eq!(
            GroupTable::cyclic(4)
                .homomorphisms_to(&GroupTable::cyclic(6))
                .len(),
            2
        );
        assert_eq!(
            GroupTable::cyclic(3)
                .homomorphisms_to(&GroupTable::cyclic(3))
                .len(),
            3
        );
        // End(V4) = M_2(F_2)
        let v4 = GroupTable::klein_four();
        assert_eq!(v4.homomorphisms_to(&v4).len(), 16);
        // End(S3): trivial, 3 maps onto an order-2 subgroup, 6 automorphisms
        let s3 = GroupTable::symmetric(3);
        assert_eq!(s3.homomorphisms_to(&s3).len(), 10);
    }
}
