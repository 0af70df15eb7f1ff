//! Shared fixtures and a table-level oracle written without the library's
//! term compiler or checkers.

#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::Arc;

use gwa::algebra::{conjugation_gwa, identity_action_gwa};
use gwa::format::read_algebra;
use gwa::{ActionTriple, FiniteGwa, GroupTable};

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/data")
}

pub fn data(name: &str) -> PathBuf {
    data_dir().join(name)
}

pub const FIXTURES: [&str; 6] = ["trivial", "Z2", "Z3", "V4", "S3", "S3-conj"];

/// The fixture algebras as shipped on disk.
pub fn fixtures() -> Vec<Arc<FiniteGwa>> {
    FIXTURES
        .iter()
        .map(|n| Arc::new(read_algebra(&data(&format!("{n}.json"))).expect("fixture loads")))
        .collect()
}

pub fn fixture(name: &str) -> Arc<FiniteGwa> {
    Arc::new(read_algebra(&data(&format!("{name}.json"))).expect("fixture loads"))
}

pub fn ident(g: GroupTable) -> Arc<FiniteGwa> {
    Arc::new(identity_action_gwa(&g).unwrap())
}

/// Groups of order at most 8 used by the property tests.
pub fn group_fleet() -> Vec<GroupTable> {
    let mut v = vec![GroupTable::trivial()];
    v.extend((2..=8).map(GroupTable::cyclic));
    v.push(GroupTable::klein_four());
    v.push(GroupTable::direct_product(
        &GroupTable::cyclic(2),
        &GroupTable::cyclic(4),
    ));
    v.push(GroupTable::direct_product(
        &GroupTable::klein_four(),
        &GroupTable::cyclic(2),
    ));
    v.push(GroupTable::symmetric(3));
    v.push(GroupTable::dihedral(4));
    v
}

/// Identity and conjugation actions on every fleet group.
pub fn algebra_fleet() -> Vec<Arc<FiniteGwa>> {
    group_fleet()
        .iter()
        .flat_map(|g| {
            [
                Arc::new(identity_action_gwa(g).unwrap()),
                Arc::new(conjugation_gwa(g).unwrap()),
            ]
        })
        .collect()
}

/// Raw tables of one algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tables {
    pub n: usize,
    pub add: Vec<usize>,
    pub neg: Vec<usize>,
    pub act: Vec<usize>,
}

impl Tables {
    pub fn of(g: &FiniteGwa) -> Self {
        let n = g.order();
        Tables {
            n,
            add: (0..n * n).map(|k| g.add(k / n, k % n)).collect(),
            neg: (0..n).map(|x| g.neg(x)).collect(),
            act: (0..n * n).map(|k| g.act(k / n, k % n)).collect(),
        }
    }

    pub fn p(&self, x: usize, y: usize) -> usize {
        self.add[x * self.n + y]
    }

    pub fn e(&self, x: usize, y: usize) -> usize {
        self.act[x * self.n + y]
    }

    pub fn is_group(&self) -> bool {
        let r = 0..self.n;
        r.clone()
            .all(|x| self.p(0, x) == x && self.p(x, 0) == x && self.p(x, self.neg[x]) == 0)
            && r.clone().all(|x| {
                r.clone().all(|y| {
                    r.clone()
                        .all(|z| self.p(self.p(x, y), z) == self.p(x, self.p(y, z)))
                })
            })
    }

    pub fn action_axioms(&self) -> bool {
        let r = 0..self.n;
        r.clone().all(|g| self.e(g, 0) == g)
            && r.clone().all(|g| {
                r.clone().all(|h| {
                    r.clone().all(|k| {
                        self.e(g, self.p(h, k)) == self.e(self.e(g, h), k)
                            && self.e(self.p(g, h), k) == self.p(self.e(g, k), self.e(h, k))
                    })
                })
            })
    }

    pub fn is_gwa(&self) -> bool {
        self.is_group() && self.action_axioms()
    }

    pub fn is_reduced(&self) -> bool {
        let r = 0..self.n;
        self.is_gwa()
            && r.clone().all(|x| {
                r.clone().all(|y| {
                    r.clone().all(|z| {
                        (y == 0 || self.p(self.e(x, y), z) == self.p(z, self.e(x, y)))
                            && self.e(x, self.e(y, z)) == self.e(x, y)
                    })
                })
            })
    }
}

/// Raw triple tables: `dot[b][a]`, `star[a][b]`, `dual[b][a]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Raw {
    pub dot: Vec<usize>,
    pub star: Vec<usize>,
    pub dual: Vec<usize>,
}

impl Raw {
    pub fn of(t: &ActionTriple) -> Self {
        Raw {
            dot: t.dot_flat().to_vec(),
            star: t.star_flat().to_vec(),
            dual: t.dual_flat().to_vec(),
        }
    }

    /// The `index`-th triple, counting with the last dual cell fastest.
    pub fn decode(nb: usize, na: usize, mut index: u64) -> Self {
        let m = nb * na;
        let mut cells = vec![0usize; 3 * m];
        for c in cells.iter_mut().rev() {
            *c = (index % na as u64) as usize;
            index /= na as u64;
        }
        Raw {
            dot: cells[..m].to_vec(),
            star: cells[m..2 * m].to_vec(),
            dual: cells[2 * m..].to_vec(),
        }
    }
}

/// An action of `b` on `a` evaluated directly on tables.
pub struct Pair<'t> {
    pub b: &'t Tables,
    pub a: &'t Tables,
    pub t: &'t Raw,
}

impl Pair<'_> {
    fn dot(&self, b: usize, a: usize) -> usize {
        self.t.dot[b * self.a.n + a]
    }

    fn star(&self, a: usize, b: usize) -> usize {
        self.t.star[a * self.b.n + b]
    }

    fn dual(&self, b: usize, a: usize) -> usize {
        self.t.dual[b * self.a.n + a]
    }

    fn each3(&self, sorts: [bool; 3], f: impl Fn(usize, usize, usize) -> bool) -> bool {
        let size = |is_b: bool| if is_b { self.b.n } else { self.a.n };
        (0..size(sorts[0]))
            .all(|x| (0..size(sorts[1])).all(|y| (0..size(sorts[2])).all(|z| f(x, y, z))))
    }

    /// Failing condition names, in catalogue order.
    pub fn failures(&self) -> Vec<&'static str> {
        let (a, b) = (self.a, self.b);
        const A: bool = false;
        const B: bool = true;
        let mut out = Vec::new();
        let mut check = |name: &'static str, ok: bool| {
            if !ok {
                out.push(name)
            }
        };
        check(
            "dot-additive",
            self.each3([B, A, A], |x, y, z| {
                self.dot(x, a.p(y, z)) == a.p(self.dot(x, y), self.dot(x, z))
            }),
        );
        check(
            "dot-compose",
            self.each3([B, B, A], |x, y, z| {
                self.dot(b.p(x, y), z) == self.dot(x, self.dot(y, z))
            }),
        );
        check("dot-unit", (0..a.n).all(|x| self.dot(0, x) == x));
        check(
            "(1_A)",
            self.each3([A, A, B], |x, y, z| {
                self.star(a.p(x, y), z) == a.p(self.star(x, z), self.star(y, z))
            }),
        );
        check(
            "(2_A)",
            self.each3([B, B, A], |x, y, z| {
                self.dual(b.p(x, y), z) == a.p(self.dual(x, z), self.dot(x, self.dual(y, z)))
            }),
        );
        check(
            "(3_A)",
            self.each3([B, A, A], |x, y, z| {
                a.p(a.e(self.dot(x, y), z), self.dual(x, z))
                    == a.p(self.dual(x, z), self.dot(x, a.e(y, z)))
            }),
        );
        check(
            "(4_A)",
            self.each3([B, A, B], |x, y, z| {
                self.star(self.dot(x, y), z) == self.dot(b.e(x, z), self.star(y, z))
            }),
        );
        check(
            "(1_B)",
            self.each3([B, A, A], |x, y, z| {
                self.dual(x, a.p(y, z)) == a.p(a.e(self.dual(x, y), z), self.dual(x, z))
            }),
        );
        check(
            "(2_B)",
            self.each3([A, B, B], |x, y, z| {
                self.star(x, b.p(y, z)) == self.star(self.star(x, y), z)
            }),
        );
        check(
            "(3_B)",
            self.each3([A, B, A], |x, y, z| {
                self.star(a.e(x, self.dot(y, z)), y) == a.e(self.star(x, y), z)
            }),
        );
        check(
            "(4_B)",
            self.each3([B, B, A], |x, y, z| {
                self.star(self.dual(x, self.dot(y, z)), y) == self.dual(b.e(x, y), z)
            }),
        );
        check("star-unit", (0..a.n).all(|x| self.star(x, 0) == x));
        out
    }

    /// Failing identities among the ten extra reduced ones.
    pub fn reduced_failures(&self) -> Vec<usize> {
        let (a, b) = (self.a, self.b);
        let mut out = Vec::new();
        for x in 0..a.n {
            for x2 in 0..a.n {
                for y in 0..b.n {
                    for y2 in 0..b.n {
                        let ok = [
                            self.dot(y, a.e(x, x2)) == a.e(x, x2),
                            a.p(self.star(x, y), x2) == a.p(x2, self.star(x, y)),
                            self.dot(y, self.star(x, y2)) == self.star(x, y2),
                            a.e(x, self.star(x2, y)) == a.e(x, x2),
                            self.dot(b.e(y, y2), x) == x,
                            a.e(x, self.dual(y, x2)) == x,
                            self.dual(y, a.e(x, x2)) == self.dual(y, x),
                            self.dual(y, self.dual(y2, x)) == 0,
                            self.star(x, b.e(y, y2)) == self.star(x, y),
                            self.dual(y, self.star(x, y2)) == self.dual(y, x),
                        ];
                        for (k, ok) in ok.into_iter().enumerate() {
                            if !ok && !out.contains(&(k + 1)) {
                                out.push(k + 1);
                            }
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn derived(&self) -> bool {
        self.failures().is_empty()
    }

    pub fn derived_reduced(&self) -> bool {
        self.derived() && self.reduced_failures().is_empty()
    }

    /// `B ⋉ A` with the pair `(b, a)` at index `b * |A| + a`.
    pub fn product(&self) -> Tables {
        let (a, b) = (self.a, self.b);
        let n = b.n * a.n;
        let split = |p: usize| (p / a.n, p % a.n);
        let join = |x: usize, y: usize| x * a.n + y;
        let mut add = vec![0; n * n];
        let mut act = vec![0; n * n];
        for p in 0..n {
            let (b1, a1) = split(p);
            for q in 0..n {
                let (b2, a2) = split(q);
                add[p * n + q] = join(b.p(b1, b2), a.p(a1, self.dot(b1, a2)));
                act[p * n + q] = join(
                    b.e(b1, b2),
                    a.p(self.star(a.e(a1, a2), b2), self.star(self.dual(b1, a2), b2)),
                );
            }
        }
        // Inverses are read off the addition table.
        let neg = (0..n)
            .map(|p| (0..n).find(|&q| add[p * n + q] == 0).unwrap_or(0))
            .collect();
        Tables { n, add, neg, act }
    }
}

/// Every map `G × G → G` satisfying the three action axioms, by brute force.
pub fn brute_force_self_actions(g: &GroupTable) -> Vec<Vec<usize>> {
    let n = g.order();
    let base = Tables {
        n,
        add: (0..n * n).map(|k| g.add(k / n, k % n)).collect(),
        neg: (0..n).map(|x| g.neg(x)).collect(),
        act: vec![0; n * n],
    };
    let total = (n as u64).pow((n * n) as u32);
    let mut out = Vec::new();
    for mut index in 0..total {
        let mut t = base.clone();
        for c in t.act.iter_mut().rev() {
            *c = (index % n as u64) as usize;
            index /= n as u64;
        }
        if t.action_axioms() {
            out.push(t.act);
        }
    }
    out
}
