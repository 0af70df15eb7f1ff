//! Ideals, ideal closure and quotients.
//!
//! A subset `A` of `G` is an ideal when
//!
//! 1. it is a normal subgroup,
//! 2. `a^g ∈ A` for all `a ∈ A`, `g ∈ G`,
//! 3. `-g + g^a ∈ A` for all `a ∈ A`, `g ∈ G`.
//!
//! Condition 3 is equivalent to `g^a - g ∈ A`; [`is_ideal`] evaluates both
//! forms and flags any disagreement.

use std::ops::ControlFlow;
use std::sync::Arc;

use crate::algebra::{is_morphism, FiniteGwa, GwaMorphism};
use crate::error::{Error, Result};
use crate::report::{expect, holds, CheckReport, Checker, LawSink, Scan};

pub mod law {
    pub const CLOSURE_ADD: &str = "closure-add";
    pub const CLOSURE_NEG: &str = "closure-neg";
    pub const NORMALITY: &str = "normality";
    pub const IDEAL_2: &str = "ideal-2";
    pub const IDEAL_3: &str = "ideal-3";
    pub const IDEAL_3_EQUIVALENCE: &str = "ideal-3-equivalence";
}

/// A subset of a finite algebra containing zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetMask {
    parent: Arc<FiniteGwa>,
    members: Vec<bool>,
}

impl SubsetMask {
    pub fn new(parent: Arc<FiniteGwa>, members: Vec<bool>) -> Result<Self> {
        if members.len() != parent.order() {
            return Err(Error::Dimension {
                what: "subset mask".into(),
                expected: parent.order(),
                found: members.len(),
            });
        }
        if !members[0] {
            return Err(Error::MissingZero);
        }
        Ok(SubsetMask { parent, members })
    }

    pub fn from_indices(parent: Arc<FiniteGwa>, indices: &[usize]) -> Result<Self> {
        let mut members = vec![false; parent.order()];
        for (position, &i) in indices.iter().enumerate() {
            if i >= parent.order() {
                return Err(Error::OutOfRange {
                    what: "subset members".into(),
                    position,
                    value: i,
                    order: parent.order(),
                });
            }
            members[i] = true;
        }
        Self::new(parent, members)
    }

    pub fn whole(parent: Arc<FiniteGwa>) -> Self {
        let members = vec![true; parent.order()];
        SubsetMask { parent, members }
    }

    pub fn zero(parent: Arc<FiniteGwa>) -> Self {
        let mut members = vec![false; parent.order()];
        members[0] = true;
        SubsetMask { parent, members }
    }

    pub fn parent(&self) -> &Arc<FiniteGwa> {
        &self.parent
    }

    #[inline]
    pub fn contains(&self, g: usize) -> bool {
        self.members[g]
    }

    pub fn mask(&self) -> &[bool] {
        &self.members
    }

    /// Member indices in ascending order.
    pub fn indices(&self) -> Vec<usize> {
        (0..self.members.len())
            .filter(|&i| self.members[i])
            .collect()
    }

    pub fn size(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_whole(&self) -> bool {
        self.members.iter().all(|&m| m)
    }
}

pub fn scan_normal_subgroup(s: &SubsetMask, sink: &mut dyn LawSink) -> Scan {
    let g = &*s.parent;
    let members = s.indices();
    for &x in &members {
        for &y in &members {
            expect(sink, s.contains(g.add(x, y)), law::CLOSURE_ADD, &[x, y])?;
        }
    }
    for &x in &members {
        expect(sink, s.contains(g.neg(x)), law::CLOSURE_NEG, &[x])?;
    }
    for &a in &members {
        for h in 0..g.order() {
            expect(
                sink,
                s.contains(g.group().conj(a, h)),
                law::NORMALITY,
                &[a, h],
            )?;
        }
    }
    ControlFlow::Continue(())
}

pub fn scan_ideal(s: &SubsetMask, sink: &mut dyn LawSink) -> Scan {
    scan_normal_subgroup(s, sink)?;
    let g = &*s.parent;
    let members = s.indices();
    for &a in &members {
        for h in 0..g.order() {
            expect(sink, s.contains(g.act(a, h)), law::IDEAL_2, &[a, h])?;
        }
    }
    // (3) in both forms; a pair where they differ is recorded only when the
    // two conditions disagree as a whole.
    let mut left_form = true;
    let mut right_form = true;
    let mut first_split = None;
    for &a in &members {
        for h in 0..g.order() {
            let left = s.contains(g.add(g.neg(h), g.act(h, a)));
            let right = s.contains(g.sub(g.act(h, a), h));
            left_form &= left;
            right_form &= right;
            if left != right && first_split.is_none() {
                first_split = Some([a, h]);
            }
            expect(sink, left, law::IDEAL_3, &[a, h])?;
        }
    }
    if left_form != right_form {
        let w = first_split.expect("forms disagree on some pair");
        sink.fail(law::IDEAL_3_EQUIVALENCE, &w)?;
    }
    ControlFlow::Continue(())
}

impl Checker {
    pub fn is_normal_subgroup(&self, s: &SubsetMask) -> CheckReport {
        self.run(|sink| scan_normal_subgroup(s, sink))
    }

    pub fn is_ideal(&self, s: &SubsetMask) -> CheckReport {
        self.run(|sink| scan_ideal(s, sink))
    }
}

pub fn is_normal_subgroup(s: &SubsetMask) -> CheckReport {
    Checker::default().is_normal_subgroup(s)
}

pub fn is_ideal(s: &SubsetMask) -> CheckReport {
    Checker::default().is_ideal(s)
}

pub fn satisfies_ideal(s: &SubsetMask) -> bool {
    holds(|sink| scan_ideal(s, sink))
}

/// Smallest ideal containing `seed`, by saturation under sums, negatives,
/// conjugates, `a^g` and `-g + g^a`.
pub fn ideal_closure(seed: &SubsetMask) -> SubsetMask {
    let g = &**seed.parent();
    let n = g.order();
    let mut members = seed.members.clone();
    loop {
        let current: Vec<usize> = (0..n).filter(|&i| members[i]).collect();
        let mut fresh = Vec::new();
        let mut push = |x: usize, members: &mut Vec<bool>| {
            if !members[x] {
                members[x] = true;
                fresh.push(x);
            }
        };
        for &a in &current {
            push(g.neg(a), &mut members);
            for &b in &current {
                push(g.add(a, b), &mut members);
            }
            for h in 0..n {
                push(g.group().conj(a, h), &mut members);
                push(g.act(a, h), &mut members);
                push(g.add(g.neg(h), g.act(h, a)), &mut members);
            }
        }
        if fresh.is_empty() {
            return SubsetMask {
                parent: seed.parent.clone(),
                members,
            };
        }
    }
}

/// `G/I` with its projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: Arc<FiniteGwa>,
    pub projection: GwaMorphism,
    /// Cosets in ascending order of their smallest member.
    pub cosets: Vec<Vec<usize>>,
}

/// Builds `G/I`, verifying that every operation is well defined on cosets.
pub fn quotient_gwa(ideal: &SubsetMask) -> Result<Quotient> {
    let report = is_ideal(ideal);
    if !report.ok {
        return Err(Error::NotAnIdeal(
            report.to_string().trim_end().replace('\n', "; "),
        ));
    }
    let g = ideal.parent().clone();
    let n = g.order();
    let members = ideal.indices();

    let mut class = vec![usize::MAX; n];
    let mut cosets: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if class[x] != usize::MAX {
            continue;
        }
        let mut coset: Vec<usize> = members.iter().map(|&i| g.add(x, i)).collect();
        coset.sort_unstable();
        coset.dedup();
        for &y in &coset {
            class[y] = cosets.len();
        }
        cosets.push(coset);
    }
    let m = cosets.len();

    let mut add = vec![0; m * m];
    let mut act = vec![0; m * m];
    let mut neg = vec![0; m];
    for (c, xs) in cosets.iter().enumerate() {
        neg[c] = class[g.neg(xs[0])];
        for &x in xs {
            if class[g.neg(x)] != neg[c] {
                return Err(Error::QuotientNotWellDefined(format!(
                    "negation differs on coset {c} at element {x}"
                )));
            }
        }
        for (d, ys) in cosets.iter().enumerate() {
            add[c * m + d] = class[g.add(xs[0], ys[0])];
            act[c * m + d] = class[g.act(xs[0], ys[0])];
            for &x in xs {
                for &y in ys {
                    if class[g.add(x, y)] != add[c * m + d] {
                        return Err(Error::QuotientNotWellDefined(format!(
                            "addition differs at ({x},{y})"
                        )));
                    }
                    if class[g.act(x, y)] != act[c * m + d] {
                        return Err(Error::QuotientNotWellDefined(format!(
                            "action differs at ({x},{y})"
                        )));
                    }
                }
            }
        }
    }

    let name = format!("{}/{:?}", g.name(), members);
    let group = crate::group::GroupTable::from_flat(name, m, add, neg);
    let algebra = Arc::new(FiniteGwa::from_group(group, act)?);
    let projection = GwaMorphism::new(g, algebra.clone(), class)?;
    debug_assert!(is_morphism(&projection).ok);
    Ok(Quotient {
        algebra,
        projection,
        cosets,
    })
}
