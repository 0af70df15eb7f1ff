//! Exhaustive generators and equivalence audits.
//!
//! The audits compare, triple by triple, the law-based characterisation of
//! derived actions with a property of the semi-direct product. Search spaces
//! up to [`DEFAULT_MAX_EXHAUSTIVE`] candidates are scanned completely; larger
//! ones are sampled from a caller-supplied seed.

use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::actions::{satisfies_derived, satisfies_derived_reduced, ActionTriple};
use crate::algebra::{satisfies_reduced, FiniteGwa};
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::ideals::{satisfies_ideal, SubsetMask};
use crate::report::holds;
use crate::semidirect::{candidate_holds, product_induces_triple, Mode, SemidirectCandidate};
use crate::term::Law;

/// Largest search space scanned exhaustively (2^24).
pub const DEFAULT_MAX_EXHAUSTIVE: u64 = 1 << 24;

/// Environment variable overriding [`DEFAULT_MAX_EXHAUSTIVE`].
pub const MAX_EXHAUSTIVE_ENV: &str = "GWA_MAX_EXHAUSTIVE";

pub fn max_exhaustive_from_env() -> u64 {
    std::env::var(MAX_EXHAUSTIVE_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_EXHAUSTIVE)
}

/// Every action table on `group` satisfying the three action axioms, sorted
/// lexicographically by table.
///
/// Each column `g ↦ g^h` is an automorphism and `h ↦ (g ↦ g^h)` turns sums
/// into composites, so an action is fixed by its columns at a generating
/// set. Those columns are chosen among the automorphisms, propagated along
/// the Cayley graph, and the result is checked against the axioms.
pub fn enumerate_self_actions(group: &GroupTable) -> Vec<FiniteGwa> {
    let n = group.order();
    let autos: Vec<Vec<usize>> = group
        .homomorphisms_to(group)
        .into_iter()
        .filter(|m| {
            let mut hit = vec![false; n];
            m.iter().all(|&y| !std::mem::replace(&mut hit[y], true))
        })
        .collect();
    let gens = group.generators();
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        if let Some(act) = propagate_columns(group, &gens, &choice, &autos) {
            found.push(act);
        }
        let mut k = gens.len();
        loop {
            if k == 0 {
                found.sort();
                found.dedup();
                return found
                    .into_iter()
                    .enumerate()
                    .map(|(i, act)| {
                        let g = group.clone().renamed(format!("{}#{i}", group.name()));
                        FiniteGwa::from_group(g, act).expect("tables in range")
                    })
                    .collect();
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < autos.len() {
                break;
            }
            choice[k] = 0;
        }
    }
}

fn propagate_columns(
    group: &GroupTable,
    gens: &[usize],
    choice: &[usize],
    autos: &[Vec<usize>],
) -> Option<Vec<usize>> {
    let n = group.order();
    let mut cols: Vec<Option<Vec<usize>>> = vec![None; n];
    cols[0] = Some((0..n).collect());
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        let cx = cols[x].clone().expect("visited");
        for (&g, &c) in gens.iter().zip(choice) {
            let cg = &autos[c];
            // y^(x+g) = (y^x)^g
            let next: Vec<usize> = cx.iter().map(|&v| cg[v]).collect();
            let y = group.add(x, g);
            match &cols[y] {
                None => {
                    cols[y] = Some(next);
                    queue.push_back(y);
                }
                Some(existing) if *existing != next => return None,
                Some(_) => {}
            }
        }
    }
    let cols: Vec<Vec<usize>> = cols
        .into_iter()
        .map(|c| c.expect("generators span"))
        .collect();
    for h in 0..n {
        for k in 0..n {
            let hk = group.add(h, k);
            if (0..n).any(|v| cols[hk][v] != cols[k][cols[h][v]]) {
                return None;
            }
        }
    }
    let mut act = vec![0; n * n];
    for (h, col) in cols.iter().enumerate() {
        for (v, &img) in col.iter().enumerate() {
            act[v * n + h] = img;
        }
    }
    Some(act)
}

/// Every ideal, ascending by size, then lexicographically by members.
pub fn enumerate_ideals(g: &Arc<FiniteGwa>) -> Vec<SubsetMask> {
    let n = g.order();
    assert!(n <= 24, "subset enumeration is limited to 24 elements");
    let mut out: Vec<SubsetMask> = (0u32..(1 << (n - 1)))
        .map(|bits| {
            let members = (0..n)
                .map(|i| i == 0 || bits & (1 << (i - 1)) != 0)
                .collect();
            SubsetMask::new(g.clone(), members).expect("contains zero")
        })
        .filter(satisfies_ideal)
        .collect();
    out.sort_by_key(|s| (s.size(), s.indices()));
    out
}

/// Cheap laws that pin individual table cells, usable as an enumeration
/// pre-filter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CellLaw {
    /// `0·a = a`
    DotUnit,
    /// `a^{0_B} = a`
    StarUnit,
    /// `0_A^b = 0_A`
    StarZero,
    /// `0_B^a = 0_A`
    DualZeroActor,
    /// `b^{0_A} = 0_A`
    DualZeroTarget,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    Dot,
    Star,
    Dual,
}

/// The set of action triples of `B` on `A`, possibly with some cells fixed
/// by [`CellLaw`]s. Triples are ordered lexicographically by the
/// concatenation of the `dot`, `star` and `dual` tables.
#[derive(Clone, Debug)]
pub struct TripleSpace {
    actor: Arc<FiniteGwa>,
    target: Arc<FiniteGwa>,
    fixed: Vec<Option<usize>>,
    free: Vec<usize>,
}

impl TripleSpace {
    pub fn new(actor: Arc<FiniteGwa>, target: Arc<FiniteGwa>, filter: &[CellLaw]) -> Result<Self> {
        let (nb, na) = (actor.order(), target.order());
        let cells = 3 * nb * na;
        let mut fixed: Vec<Option<usize>> = vec![None; cells];
        let cell = |slot: Slot, r: usize, c: usize| -> usize {
            match slot {
                Slot::Dot => r * na + c,
                Slot::Star => nb * na + r * nb + c,
                Slot::Dual => 2 * nb * na + r * na + c,
            }
        };
        let mut pin = |i: usize, v: usize| -> Result<()> {
            match fixed[i] {
                Some(w) if w != v => Err(Error::InvalidAlgebra {
                    name: "triple filter".into(),
                    reason: format!("cell {i} pinned to both {w} and {v}"),
                }),
                _ => {
                    fixed[i] = Some(v);
                    Ok(())
                }
            }
        };
        for law in filter {
            match law {
                CellLaw::DotUnit => (0..na).try_for_each(|a| pin(cell(Slot::Dot, 0, a), a))?,
                CellLaw::StarUnit => (0..na).try_for_each(|a| pin(cell(Slot::Star, a, 0), a))?,
                CellLaw::StarZero => (0..nb).try_for_each(|b| pin(cell(Slot::Star, 0, b), 0))?,
                CellLaw::DualZeroActor => {
                    (0..na).try_for_each(|a| pin(cell(Slot::Dual, 0, a), 0))?
                }
                CellLaw::DualZeroTarget => {
                    (0..nb).try_for_each(|b| pin(cell(Slot::Dual, b, 0), 0))?
                }
            }
        }
        let free = (0..cells).filter(|&i| fixed[i].is_none()).collect();
        Ok(TripleSpace {
            actor,
            target,
            fixed,
            free,
        })
    }

    pub fn actor(&self) -> &Arc<FiniteGwa> {
        &self.actor
    }

    pub fn target(&self) -> &Arc<FiniteGwa> {
        &self.target
    }

    /// Number of triples, saturating at `u128::MAX`.
    pub fn size(&self) -> u128 {
        let radix = self.target.order() as u128;
        self.free
            .iter()
            .try_fold(1u128, |acc, _| acc.checked_mul(radix))
            .unwrap_or(u128::MAX)
    }

    fn build(&self, free_values: impl Iterator<Item = usize>) -> ActionTriple {
        let mut cells: Vec<usize> = self.fixed.iter().map(|c| c.unwrap_or(0)).collect();
        for (&i, v) in self.free.iter().zip(free_values) {
            cells[i] = v;
        }
        let m = self.actor.order() * self.target.order();
        let dual = cells.split_off(2 * m);
        let star = cells.split_off(m);
        ActionTriple::from_flat(self.actor.clone(), self.target.clone(), cells, star, dual)
            .expect("cells are in range")
    }

    /// The triple at position `index` in lexicographic order.
    pub fn triple_at(&self, mut index: u128) -> ActionTriple {
        let radix = self.target.order() as u128;
        let mut digits = vec![0usize; self.free.len()];
        for d in digits.iter_mut().rev() {
            *d = (index % radix) as usize;
            index /= radix;
        }
        self.build(digits.into_iter())
    }

    /// Exhaustive stream in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = ActionTriple> + '_ {
        let size = self.size();
        (0..size).map(move |i| self.triple_at(i))
    }

    /// `count` triples drawn uniformly (with replacement) from the space.
    pub fn sample(&self, seed: u64, count: usize) -> Vec<ActionTriple> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let na = self.target.order();
        (0..count)
            .map(|_| {
                let values: Vec<usize> = self.free.iter().map(|_| rng.gen_range(0..na)).collect();
                self.build(values.into_iter())
            })
            .collect()
    }
}

/// All action triples of `b` on `a` satisfying the cell laws in `filter`.
pub fn enumerate_action_triples(
    b: &Arc<FiniteGwa>,
    a: &Arc<FiniteGwa>,
    filter: &[CellLaw],
) -> Result<TripleSpace> {
    TripleSpace::new(b.clone(), a.clone(), filter)
}

/// What the product side of an audit requires.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProductTest {
    /// `B ⋉ A` is an object of the category.
    #[default]
    Object,
    /// `B ⋉ A` is an object and its canonical split extension induces the
    /// given triple again.
    ObjectInducingTriple,
}

#[derive(Clone, Debug)]
pub struct AuditOptions {
    pub product_test: ProductTest,
    pub seed: Option<u64>,
    pub samples: usize,
    pub max_exhaustive: u64,
    pub filter: Vec<CellLaw>,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions {
            product_test: ProductTest::Object,
            seed: None,
            samples: 100_000,
            max_exhaustive: max_exhaustive_from_env(),
            filter: Vec::new(),
        }
    }
}

/// Tables of a triple, without the algebras.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TripleTables {
    pub dot: Vec<Vec<usize>>,
    pub star: Vec<Vec<usize>>,
    pub dual: Vec<Vec<usize>>,
}

impl From<&ActionTriple> for TripleTables {
    fn from(t: &ActionTriple) -> Self {
        TripleTables {
            dot: t.dot_rows(),
            star: t.star_rows(),
            dual: t.dual_rows(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Disagreement {
    pub triple: TripleTables,
    /// Verdict of the law-based side.
    pub derived: bool,
    /// Verdict of the product side.
    pub product: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditSummary {
    pub mode: String,
    pub product_test: ProductTest,
    pub actor: String,
    pub target: String,
    pub exhaustive: bool,
    pub total: u64,
    pub agree: u64,
    /// Triples on which both sides hold.
    pub derived: u64,
    pub disagreements: Vec<Disagreement>,
    pub seed: Option<u64>,
    pub elapsed_ms: u64,
}

impl AuditSummary {
    pub fn all_agree(&self) -> bool {
        self.agree == self.total && self.disagreements.is_empty()
    }
}

#[derive(Default)]
struct Tally {
    total: u64,
    agree: u64,
    derived: u64,
    disagreements: Vec<Disagreement>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.total += other.total;
        self.agree += other.agree;
        self.derived += other.derived;
        self.disagreements.extend(other.disagreements);
        self
    }
}

fn judge(t: &ActionTriple, mode: Mode, test: ProductTest) -> Tally {
    let derived = match mode {
        Mode::Gwa => satisfies_derived(t),
        Mode::Reduced => satisfies_derived_reduced(t),
    };
    let c = SemidirectCandidate::from_triple(t);
    let product = match test {
        ProductTest::Object => candidate_holds(&c, mode),
        ProductTest::ObjectInducingTriple => product_induces_triple(&c, mode),
    };
    let mut tally = Tally {
        total: 1,
        ..Tally::default()
    };
    if derived == product {
        tally.agree = 1;
        tally.derived = u64::from(derived);
    } else {
        tally.disagreements.push(Disagreement {
            triple: t.into(),
            derived,
            product,
        });
    }
    tally
}

/// Compares the law-based characterisation of derived actions (in `mode`)
/// with the product side selected in `opts`, over every triple or a seeded
/// sample.
pub fn audit(
    b: &Arc<FiniteGwa>,
    a: &Arc<FiniteGwa>,
    mode: Mode,
    opts: &AuditOptions,
) -> Result<AuditSummary> {
    if mode == Mode::Reduced {
        for g in [b, a] {
            if !satisfies_reduced(g) {
                return Err(Error::NotReduced(g.name().to_owned()));
            }
        }
    }
    let start = Instant::now();
    let space = TripleSpace::new(b.clone(), a.clone(), &opts.filter)?;
    let size = space.size();
    let exhaustive = size <= u128::from(opts.max_exhaustive);
    let tally = if exhaustive {
        (0..size as u64)
            .into_par_iter()
            .fold(Tally::default, |acc, i| {
                acc.merge(judge(
                    &space.triple_at(u128::from(i)),
                    mode,
                    opts.product_test,
                ))
            })
            .reduce(Tally::default, Tally::merge)
    } else {
        let seed = opts.seed.ok_or(Error::SeedRequired {
            size,
            cap: opts.max_exhaustive,
        })?;
        space
            .sample(seed, opts.samples)
            .par_iter()
            .fold(Tally::default, |acc, t| {
                acc.merge(judge(t, mode, opts.product_test))
            })
            .reduce(Tally::default, Tally::merge)
    };
    let mut disagreements = tally.disagreements;
    disagreements.sort();
    Ok(AuditSummary {
        mode: match mode {
            Mode::Gwa => "gwa".into(),
            Mode::Reduced => "reduced".into(),
        },
        product_test: opts.product_test,
        actor: b.name().to_owned(),
        target: a.name().to_owned(),
        exhaustive,
        total: tally.total,
        agree: tally.agree,
        derived: tally.derived,
        disagreements,
        seed: if exhaustive { None } else { opts.seed },
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Derived actions in the unrestricted category versus Gwa-validity of the
/// product.
pub fn audit_derived_gwa(
    b: &Arc<FiniteGwa>,
    a: &Arc<FiniteGwa>,
    opts: &AuditOptions,
) -> Result<AuditSummary> {
    audit(b, a, Mode::Gwa, opts)
}

/// Same, between reduced objects, with reducedness of the product.
pub fn audit_derived_reduced(
    b: &Arc<FiniteGwa>,
    a: &Arc<FiniteGwa>,
    opts: &AuditOptions,
) -> Result<AuditSummary> {
    audit(b, a, Mode::Reduced, opts)
}

/// Outcome of checking "premises ⇒ conclusions" over a triple space.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImplicationSummary {
    pub total: u64,
    /// Triples on which every premise holds.
    pub premises_hold: u64,
    /// Triples where the premises hold but a conclusion fails, with the
    /// identifier of the first failing conclusion.
    pub counterexamples: Vec<(TripleTables, String)>,
}

pub fn implication_audit(
    space: &TripleSpace,
    premises: &[&Law],
    conclusions: &[&Law],
) -> ImplicationSummary {
    let mut out = ImplicationSummary::default();
    for t in space.iter() {
        out.total += 1;
        if !premises.iter().all(|l| holds(|s| l.scan(&t, s))) {
            continue;
        }
        out.premises_hold += 1;
        if let Some(l) = conclusions.iter().find(|l| !holds(|s| l.scan(&t, s))) {
            out.counterexamples.push(((&t).into(), l.id().to_owned()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::{find_law, law, self_action};
    use crate::algebra::{conjugation_gwa, identity_action_gwa, validate_self_action};

    fn z(n: usize) -> Arc<FiniteGwa> {
        Arc::new(identity_action_gwa(&GroupTable::cyclic(n)).unwrap())
    }

    fn trivial() -> Arc<FiniteGwa> {
        Arc::new(identity_action_gwa(&GroupTable::trivial()).unwrap())
    }

    #[test]
    fn self_action_counts() {
        assert_eq!(enumerate_self_actions(&GroupTable::trivial()).len(), 1);
        let z2 = enumerate_self_actions(&GroupTable::cyclic(2));
        assert_eq!(z2.len(), 1);
        assert_eq!(z2[0].act_rows(), vec![vec![0, 0], vec![1, 1]]);
    }

    #[test]
    fn s3_self_actions_include_identity_and_conjugation() {
        let s3 = GroupTable::symmetric(3);
        let all = enumerate_self_actions(&s3);
        let id = identity_action_gwa(&s3).unwrap();
        let conj = conjugation_gwa(&s3).unwrap();
        assert!(all.iter().any(|g| g.act_flat() == id.act_flat()));
        assert!(all.iter().any(|g| g.act_flat() == conj.act_flat()));
        assert!(all.iter().all(|g| validate_self_action(g).ok));
        let tables: Vec<_> = all.iter().map(|g| g.act_flat().to_vec()).collect();
        assert!(tables.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn ideal_enumeration() {
        assert_eq!(enumerate_ideals(&trivial()).len(), 1);
        let z2: Vec<_> = enumerate_ideals(&z(2))
            .iter()
            .map(SubsetMask::indices)
            .collect();
        assert_eq!(z2, vec![vec![0], vec![0, 1]]);
        let s3 = Arc::new(conjugation_gwa(&GroupTable::symmetric(3)).unwrap());
        let sizes: Vec<_> = enumerate_ideals(&s3).iter().map(SubsetMask::size).collect();
        assert_eq!(sizes, vec![1, 3, 6]);
    }

    #[test]
    fn triple_space_sizes() {
        let z2 = z(2);
        let all = enumerate_action_triples(&z2, &z2, &[]).unwrap();
        assert_eq!(all.size(), 4096);
        let t1 = trivial();
        assert_eq!(
            enumerate_action_triples(&t1, &z2, &[CellLaw::DotUnit, CellLaw::StarUnit])
                .unwrap()
                .size(),
            4
        );
        assert_eq!(enumerate_action_triples(&z2, &t1, &[]).unwrap().size(), 1);
        assert_eq!(enumerate_action_triples(&t1, &t1, &[]).unwrap().size(), 1);
    }

    #[test]
    fn filtered_count_matches_unfiltered_scan() {
        let z2 = z(2);
        let filtered =
            enumerate_action_triples(&z2, &z2, &[CellLaw::DotUnit, CellLaw::StarUnit]).unwrap();
        let unit = find_law(law::DOT_UNIT).unwrap();
        let star_unit = find_law(law::STAR_UNIT).unwrap();
        let oracle = enumerate_action_triples(&z2, &z2, &[])
            .unwrap()
            .iter()
            .filter(|t| holds(|s| unit.scan(t, s)) && holds(|s| star_unit.scan(t, s)))
            .count();
        assert_eq!(filtered.size(), oracle as u128);
        assert_eq!(oracle, 256);
        assert!(filtered
            .iter()
            .all(|t| holds(|s| unit.scan(&t, s)) && holds(|s| star_unit.scan(&t, s))));
    }

    #[test]
    fn stream_order_is_lexicographic_and_deterministic() {
        let z2 = z(2);
        let space = enumerate_action_triples(&z2, &z2, &[]).unwrap();
        let first: Vec<TripleTables> = space.iter().take(50).map(|t| (&t).into()).collect();
        let again: Vec<TripleTables> = space.iter().take(50).map(|t| (&t).into()).collect();
        assert_eq!(first, again);
        let flat = |t: &TripleTables| -> Vec<usize> {
            t.dot
                .concat()
                .into_iter()
                .chain(t.star.concat())
                .chain(t.dual.concat())
                .collect()
        };
        assert!(first.windows(2).all(|w| flat(&w[0]) < flat(&w[1])));
        assert_eq!(space.sample(7, 20), space.sample(7, 20));
    }

    #[test]
    fn seed_required_beyond_cap() {
        let z3 = z(3);
        let opts = AuditOptions {
            max_exhaustive: 1000,
            ..AuditOptions::default()
        };
        assert!(matches!(
            audit_derived_gwa(&z3, &z3, &opts),
            Err(Error::SeedRequired { .. })
        ));
    }

    #[test]
    fn reduced_audit_rejects_non_reduced_input() {
        let s3 = Arc::new(conjugation_gwa(&GroupTable::symmetric(3)).unwrap());
        let t1 = trivial();
        assert!(matches!(
            audit_derived_reduced(&s3, &t1, &AuditOptions::default()),
            Err(Error::NotReduced(_))
        ));
    }

    #[test]
    fn trivial_audits() {
        let (t1, z2) = (trivial(), z(2));
        for (b, a) in [(&t1, &t1), (&z2, &t1)] {
            let s = audit_derived_gwa(b, a, &AuditOptions::default()).unwrap();
            assert_eq!((s.total, s.agree), (1, 1));
        }
    }

    #[test]
    fn self_action_is_counted_as_derived() {
        let z2 = z(2);
        let s = audit_derived_gwa(&z2, &z2, &AuditOptions::default()).unwrap();
        assert!(s.derived >= 1);
        assert!(satisfies_derived(&self_action(&z2).unwrap()));
    }
}
