//! Groups with an action on themselves.
//!
//! A [`FiniteGwa`] is a group `(G, +)` together with a right action
//! `g^h = act[g][h]` of `G` on itself satisfying
//!
//! * `eps-1`: `g^(h+h') = (g^h)^h'`
//! * `eps-2`: `g^0 = g`
//! * `eps-3`: `(g+g')^h = g^h + g'^h`
//!
//! The tables are accepted as given; the laws are checked by
//! [`validate_gwa`] and friends.

use std::ops::ControlFlow;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{check_entries, flatten, unflatten, GroupTable};
use crate::report::{expect, holds, CheckReport, Checker, LawSink, Scan};

/// Law identifiers used in reports.
pub mod law {
    pub const EPS_1: &str = "eps-1";
    pub const EPS_2: &str = "eps-2";
    pub const EPS_3: &str = "eps-3";
    pub const ZERO_FIXED: &str = "zero-fixed";
    pub const NEG_COMPAT: &str = "neg-compat";
    pub const REDUCED_1: &str = "reduced-1";
    pub const REDUCED_2: &str = "reduced-2";
    pub const ADDITIVE: &str = "additive";
    pub const EQUIVARIANCE: &str = "equivariance";
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGwa {
    group: GroupTable,
    act: Vec<usize>,
}

impl FiniteGwa {
    pub fn new(
        name: impl Into<String>,
        add: Vec<Vec<usize>>,
        neg: Vec<usize>,
        act: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let group = GroupTable::new(name, add, neg)?;
        let n = group.order();
        let act = flatten("act", act, n, n, n)?;
        Ok(FiniteGwa { group, act })
    }

    /// Attaches a flat row-major action table (`act[g * n + h] = g^h`).
    pub fn from_group(group: GroupTable, act: Vec<usize>) -> Result<Self> {
        let n = group.order();
        if act.len() != n * n {
            return Err(Error::Dimension {
                what: "act".into(),
                expected: n * n,
                found: act.len(),
            });
        }
        check_entries("act", &act, n)?;
        Ok(FiniteGwa { group, act })
    }

    pub fn from_fn(group: GroupTable, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let n = group.order();
        let act = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Self::from_group(group, act)
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.group = self.group.renamed(name);
        self
    }

    pub fn name(&self) -> &str {
        self.group.name()
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    #[inline]
    pub fn add(&self, g: usize, h: usize) -> usize {
        self.group.add(g, h)
    }

    #[inline]
    pub fn neg(&self, g: usize) -> usize {
        self.group.neg(g)
    }

    #[inline]
    pub fn sub(&self, g: usize, h: usize) -> usize {
        self.group.sub(g, h)
    }

    /// `g^h`.
    #[inline]
    pub fn act(&self, g: usize, h: usize) -> usize {
        self.act[g * self.group.order() + h]
    }

    pub fn act_rows(&self) -> Vec<Vec<usize>> {
        unflatten(&self.act, self.order())
    }

    pub fn act_flat(&self) -> &[usize] {
        &self.act
    }
}

/// A map between carriers, claimed to be a morphism of groups with action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GwaMorphism {
    pub source: Arc<FiniteGwa>,
    pub target: Arc<FiniteGwa>,
    pub map: Vec<usize>,
}

impl GwaMorphism {
    pub fn new(source: Arc<FiniteGwa>, target: Arc<FiniteGwa>, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.order() {
            return Err(Error::Dimension {
                what: "morphism map".into(),
                expected: source.order(),
                found: map.len(),
            });
        }
        check_entries("morphism map", &map, target.order())?;
        Ok(GwaMorphism {
            source,
            target,
            map,
        })
    }

    pub fn identity(g: Arc<FiniteGwa>) -> Self {
        let map = (0..g.order()).collect();
        GwaMorphism {
            source: g.clone(),
            target: g,
            map,
        }
    }

    pub fn zero(source: Arc<FiniteGwa>, target: Arc<FiniteGwa>) -> Self {
        let map = vec![0; source.order()];
        GwaMorphism {
            source,
            target,
            map,
        }
    }

    #[inline]
    pub fn apply(&self, g: usize) -> usize {
        self.map[g]
    }

    /// `other ∘ self`: first `self`, then `other`.
    pub fn then(&self, other: &GwaMorphism) -> Result<GwaMorphism> {
        if other.source.order() != self.target.order() {
            return Err(Error::Dimension {
                what: "composable morphisms".into(),
                expected: self.target.order(),
                found: other.source.order(),
            });
        }
        Ok(GwaMorphism {
            source: self.source.clone(),
            target: other.target.clone(),
            map: self.map.iter().map(|&x| other.map[x]).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        let mut hit = vec![false; self.target.order()];
        self.map
            .iter()
            .all(|&y| !std::mem::replace(&mut hit[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.order()];
        for &y in &self.map {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }
}

pub fn scan_self_action(g: &FiniteGwa, sink: &mut dyn LawSink) -> Scan {
    let n = g.order();
    for x in 0..n {
        for h in 0..n {
            let xh = g.act(x, h);
            for k in 0..n {
                expect(
                    sink,
                    g.act(x, g.add(h, k)) == g.act(xh, k),
                    law::EPS_1,
                    &[x, h, k],
                )?;
            }
        }
    }
    for x in 0..n {
        expect(sink, g.act(x, 0) == x, law::EPS_2, &[x])?;
    }
    for x in 0..n {
        for y in 0..n {
            let xy = g.add(x, y);
            for h in 0..n {
                expect(
                    sink,
                    g.act(xy, h) == g.add(g.act(x, h), g.act(y, h)),
                    law::EPS_3,
                    &[x, y, h],
                )?;
            }
        }
    }
    for h in 0..n {
        expect(sink, g.act(0, h) == 0, law::ZERO_FIXED, &[h])?;
    }
    for x in 0..n {
        for h in 0..n {
            expect(
                sink,
                g.act(g.neg(x), h) == g.neg(g.act(x, h)),
                law::NEG_COMPAT,
                &[x, h],
            )?;
        }
    }
    ControlFlow::Continue(())
}

pub fn scan_gwa(g: &FiniteGwa, sink: &mut dyn LawSink) -> Scan {
    g.group().scan_laws(sink)?;
    scan_self_action(g, sink)
}

/// `reduced-1`: `x^y + z = z + x^y` for `y != 0`; `reduced-2`: `x^(y^z) = x^y`.
pub fn scan_reduced(g: &FiniteGwa, sink: &mut dyn LawSink) -> Scan {
    let n = g.order();
    for x in 0..n {
        for y in 1..n {
            let xy = g.act(x, y);
            for z in 0..n {
                expect(
                    sink,
                    g.add(xy, z) == g.add(z, xy),
                    law::REDUCED_1,
                    &[x, y, z],
                )?;
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                expect(
                    sink,
                    g.act(x, g.act(y, z)) == g.act(x, y),
                    law::REDUCED_2,
                    &[x, y, z],
                )?;
            }
        }
    }
    ControlFlow::Continue(())
}

pub fn scan_morphism(f: &GwaMorphism, sink: &mut dyn LawSink) -> Scan {
    let (s, t) = (&*f.source, &*f.target);
    let n = s.order();
    for x in 0..n {
        for y in 0..n {
            expect(
                sink,
                f.apply(s.add(x, y)) == t.add(f.apply(x), f.apply(y)),
                law::ADDITIVE,
                &[x, y],
            )?;
        }
    }
    for x in 0..n {
        for y in 0..n {
            expect(
                sink,
                f.apply(s.act(x, y)) == t.act(f.apply(x), f.apply(y)),
                law::EQUIVARIANCE,
                &[x, y],
            )?;
        }
    }
    ControlFlow::Continue(())
}

impl Checker {
    pub fn validate_group(&self, g: &FiniteGwa) -> CheckReport {
        self.run(|s| g.group().scan_laws(s))
    }

    pub fn validate_self_action(&self, g: &FiniteGwa) -> CheckReport {
        self.run(|s| scan_self_action(g, s))
    }

    pub fn validate_gwa(&self, g: &FiniteGwa) -> CheckReport {
        self.run(|s| scan_gwa(g, s))
    }

    pub fn is_reduced(&self, g: &FiniteGwa) -> CheckReport {
        self.run(|s| scan_reduced(g, s))
    }

    pub fn is_morphism(&self, f: &GwaMorphism) -> CheckReport {
        self.run(|s| scan_morphism(f, s))
    }
}

/// Group axioms of the underlying `(add, neg, 0)`.
pub fn validate_group(g: &FiniteGwa) -> CheckReport {
    Checker::default().validate_group(g)
}

/// The three action axioms plus the consequences `0^h = 0` and
/// `(-g)^h = -(g^h)`.
pub fn validate_self_action(g: &FiniteGwa) -> CheckReport {
    Checker::default().validate_self_action(g)
}

pub fn validate_gwa(g: &FiniteGwa) -> CheckReport {
    Checker::default().validate_gwa(g)
}

pub fn is_reduced(g: &FiniteGwa) -> CheckReport {
    Checker::default().is_reduced(g)
}

pub fn is_morphism(f: &GwaMorphism) -> CheckReport {
    Checker::default().is_morphism(f)
}

/// Boolean form of [`validate_gwa`] that stops at the first failure.
pub fn satisfies_gwa(g: &FiniteGwa) -> bool {
    holds(|s| scan_gwa(g, s))
}

pub fn satisfies_reduced(g: &FiniteGwa) -> bool {
    holds(|s| scan_reduced(g, s))
}

fn require_group(group: &GroupTable) -> Result<()> {
    let report = group.validate();
    if report.ok {
        Ok(())
    } else {
        Err(Error::InvalidAlgebra {
            name: group.name().to_owned(),
            reason: report.to_string().trim_end().replace('\n', "; "),
        })
    }
}

/// `g^h = g`.
pub fn identity_action_gwa(group: &GroupTable) -> Result<FiniteGwa> {
    require_group(group)?;
    FiniteGwa::from_fn(group.clone(), |g, _| g)
}

/// `g^h = -h + g + h`.
pub fn conjugation_gwa(group: &GroupTable) -> Result<FiniteGwa> {
    require_group(group)?;
    let name = format!("{}-conj", group.name());
    FiniteGwa::from_fn(group.clone().renamed(name), |g, h| group.conj(g, h))
}
