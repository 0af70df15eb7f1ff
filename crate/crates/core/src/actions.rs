//! Action triples of `B` on `A` and the derived-action conditions.
//!
//! A triple consists of three tables:
//!
//! * `dot[b][a]  = b·a`
//! * `star[a][b] = a^b`
//! * `dual[b][a] = b^a` (an element of `A`)
//!
//! No law is assumed at construction. The condition lists below are stored
//! as [`Law`] values and checked by one generic loop, see [`crate::term`].

use std::ops::ControlFlow;
use std::sync::{Arc, OnceLock};

use crate::algebra::{satisfies_reduced, validate_gwa, FiniteGwa};
use crate::error::{Error, Result};
use crate::group::{check_entries, flatten, unflatten, GroupTable};
use crate::ideals::{is_ideal, SubsetMask};
use crate::report::{holds, CheckReport, Checker, LawSink, Scan};
use crate::term::{Law, Sort, Term};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionTriple {
    actor: Arc<FiniteGwa>,
    target: Arc<FiniteGwa>,
    dot: Vec<usize>,
    star: Vec<usize>,
    dual: Vec<usize>,
}

impl ActionTriple {
    /// From row-major tables: `dot` and `dual` are `|B| x |A|`, `star` is
    /// `|A| x |B|`, all with entries in `A`.
    pub fn new(
        actor: Arc<FiniteGwa>,
        target: Arc<FiniteGwa>,
        dot: Vec<Vec<usize>>,
        star: Vec<Vec<usize>>,
        dual: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let (nb, na) = (actor.order(), target.order());
        let dot = flatten("dot", dot, nb, na, na)?;
        let star = flatten("star", star, na, nb, na)?;
        let dual = flatten("dual", dual, nb, na, na)?;
        Ok(ActionTriple {
            actor,
            target,
            dot,
            star,
            dual,
        })
    }

    pub fn from_flat(
        actor: Arc<FiniteGwa>,
        target: Arc<FiniteGwa>,
        dot: Vec<usize>,
        star: Vec<usize>,
        dual: Vec<usize>,
    ) -> Result<Self> {
        let (nb, na) = (actor.order(), target.order());
        for (what, table) in [("dot", &dot), ("star", &star), ("dual", &dual)] {
            if table.len() != nb * na {
                return Err(Error::Dimension {
                    what: what.into(),
                    expected: nb * na,
                    found: table.len(),
                });
            }
            check_entries(what, table, na)?;
        }
        Ok(ActionTriple {
            actor,
            target,
            dot,
            star,
            dual,
        })
    }

    pub fn from_fn(
        actor: Arc<FiniteGwa>,
        target: Arc<FiniteGwa>,
        dot: impl Fn(usize, usize) -> usize,
        star: impl Fn(usize, usize) -> usize,
        dual: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let (nb, na) = (actor.order(), target.order());
        let dot = (0..nb * na).map(|k| dot(k / na, k % na)).collect();
        let star = (0..na * nb).map(|k| star(k / nb, k % nb)).collect();
        let dual = (0..nb * na).map(|k| dual(k / na, k % na)).collect();
        Self::from_flat(actor, target, dot, star, dual)
    }

    /// `B`.
    pub fn actor(&self) -> &Arc<FiniteGwa> {
        &self.actor
    }

    /// `A`.
    pub fn target(&self) -> &Arc<FiniteGwa> {
        &self.target
    }

    /// `b·a`.
    #[inline]
    pub fn dot(&self, b: usize, a: usize) -> usize {
        self.dot[b * self.target.order() + a]
    }

    /// `a^b`.
    #[inline]
    pub fn star(&self, a: usize, b: usize) -> usize {
        self.star[a * self.actor.order() + b]
    }

    /// `b^a`.
    #[inline]
    pub fn dual(&self, b: usize, a: usize) -> usize {
        self.dual[b * self.target.order() + a]
    }

    pub fn dot_rows(&self) -> Vec<Vec<usize>> {
        unflatten(&self.dot, self.target.order())
    }

    pub fn star_rows(&self) -> Vec<Vec<usize>> {
        unflatten(&self.star, self.actor.order())
    }

    pub fn dual_rows(&self) -> Vec<Vec<usize>> {
        unflatten(&self.dual, self.target.order())
    }

    pub fn dot_flat(&self) -> &[usize] {
        &self.dot
    }

    pub fn star_flat(&self) -> &[usize] {
        &self.star
    }

    pub fn dual_flat(&self) -> &[usize] {
        &self.dual
    }

    /// Table-for-table equality, ignoring the identity of the algebras.
    pub fn same_tables(&self, other: &ActionTriple) -> bool {
        self.dot == other.dot && self.star == other.star && self.dual == other.dual
    }
}

/// Law identifiers, as they appear in reports.
pub mod law {
    pub const DOT_ADDITIVE: &str = "b·(a+a')=b·a+b·a'";
    pub const DOT_COMPOSE: &str = "(b+b')·a=b·(b'·a)";
    pub const DOT_UNIT: &str = "0·a=a";
    pub const A1: &str = "(1_A)";
    pub const A2: &str = "(2_A)";
    pub const A3: &str = "(3_A)";
    pub const A4: &str = "(4_A)";
    pub const B1: &str = "(1_B)";
    pub const B2: &str = "(2_B)";
    pub const B3: &str = "(3_B)";
    pub const B4: &str = "(4_B)";
    pub const ZERO_A_STAR: &str = "0_A^b=0_A";
    pub const ZERO_B_DUAL: &str = "0_B^a=0_A";
    pub const DUAL_ZERO_A: &str = "b^{0_A}=0_A";
    pub const STAR_UNIT: &str = "a^{0_B}=a";
    pub const R1: &str = "b·a^{a'}=a^{a'}";
    pub const R2: &str = "a^b+a'=a'+a^b";
    pub const R3: &str = "b·a^{b'}=a^{b'}";
    pub const R4: &str = "a^{(a'^b)}=a^{a'}";
    pub const R5: &str = "b^{b'}·a=a";
    pub const R6: &str = "a^{(b^{a'})}=a";
    pub const R7: &str = "b^{(a^{a'})}=b^a";
    pub const R8: &str = "b^{(b'^a)}=0";
    pub const R9: &str = "a^{(b^{b'})}=a^b";
    pub const R10: &str = "b^{(a^{b'})}=b^a";
    pub const A2_REDUCED: &str = "(2_A) reduced form";
    pub const A3_REDUCED: &str = "(3_A) reduced form";
    pub const A4_REDUCED: &str = "(4_A) reduced form";
    /// Prefix for a failed cross-check between the zero laws and the laws
    /// they are derived from.
    pub const DERIVATION_PREFIX: &str = "derivation: ";
}

use Sort::{A, B};

fn v(i: usize) -> Term {
    Term::var(i)
}

fn mk(id: &str, vars: &[Sort], lhs: Term, rhs: Term) -> Law {
    Law::new(id, vars, lhs, rhs).expect("catalog laws are well sorted")
}

/// Group-action laws of `dot`.
pub fn dot_action_laws() -> &'static [Law] {
    static LAWS: OnceLock<Vec<Law>> = OnceLock::new();
    LAWS.get_or_init(|| {
        let (b, a, a2) = (|| v(0), || v(1), || v(2));
        let (b1, b2, x) = (|| v(0), || v(1), || v(2));
        vec![
            mk(
                law::DOT_ADDITIVE,
                &[B, A, A],
                b().dot(a() + a2()),
                b().dot(a()) + b().dot(a2()),
            ),
            mk(
                law::DOT_COMPOSE,
                &[B, B, A],
                (b1() + b2()).dot(x()),
                b1().dot(b2().dot(x())),
            ),
            mk(law::DOT_UNIT, &[A], Term::zero_b().dot(v(0)), v(0)),
        ]
    })
}

/// `(1_A)`–`(4_A)`.
pub fn conditions_a() -> &'static [Law] {
    static LAWS: OnceLock<Vec<Law>> = OnceLock::new();
    LAWS.get_or_init(|| {
        vec![
            // (a+a')^b = a^b + a'^b
            {
                let (a, a2, b) = (|| v(0), || v(1), || v(2));
                mk(
                    law::A1,
                    &[A, A, B],
                    (a() + a2()).pow(b()),
                    a().pow(b()) + a2().pow(b()),
                )
            },
            // (b+b')^a = b^a + b·(b'^a)
            {
                let (b, b2, a) = (|| v(0), || v(1), || v(2));
                mk(
                    law::A2,
                    &[B, B, A],
                    (b() + b2()).pow(a()),
                    b().pow(a()) + b().dot(b2().pow(a())),
                )
            },
            // (b·a)^a' + b^a' = b^a' + b·(a^a')
            {
                let (b, a, a2) = (|| v(0), || v(1), || v(2));
                mk(
                    law::A3,
                    &[B, A, A],
                    b().dot(a()).pow(a2()) + b().pow(a2()),
                    b().pow(a2()) + b().dot(a().pow(a2())),
                )
            },
            // (b·a)^b' = b^b' · a^b'
            {
                let (b, a, b2) = (|| v(0), || v(1), || v(2));
                mk(
                    law::A4,
                    &[B, A, B],
                    b().dot(a()).pow(b2()),
                    b().pow(b2()).dot(a().pow(b2())),
                )
            },
        ]
    })
}

/// `(1_B)`–`(4_B)`.
pub fn conditions_b() -> &'static [Law] {
    static LAWS: OnceLock<Vec<Law>> = OnceLock::new();
    LAWS.get_or_init(|| {
        vec![
            // b^(a+a') = (b^a)^a' + b^a'
            {
                let (b, a, a2) = (|| v(0), || v(1), || v(2));
                mk(
                    law::B1,
                    &[B, A, A],
                    b().pow(a() + a2()),
                    b().pow(a()).pow(a2()) + b().pow(a2()),
                )
            },
            // a^(b+b') = (a^b)^b'
            {
                let (a, b, b2) = (|| v(0), || v(1), || v(2));
                mk(
                    law::B2,
                    &[A, B, B],
                    a().pow(b() + b2()),
                    a().pow(b()).pow(b2()),
                )
            },
            // (a^(b·a'))^b = (a^b)^a'
            {
                let (a, b, a2) = (|| v(0), || v(1), || v(2));
                mk(
                    law::B3,
                    &[A, B, A],
                    a().pow(b().dot(a2())).pow(b()),
                    a().pow(b()).pow(a2()),
                )
            },
            // (b^(b'·a))^b' = (b^b')^a
            {
                let (b, b2, a) = (|| v(0), || v(1), || v(2));
                mk(
                    law::B4,
                    &[B, B, A],
                    b().pow(b2().dot(a())).pow(b2()),
                    b().pow(b2()).pow(a()),
                )
            },
        ]
    })
}

/// `0_A^b = 0_A`, `0_B^a = 0_A`, `b^{0_A} = 0_A`, `a^{0_B} = a`.
pub fn unit_and_zero_laws() -> &'static [Law] {
    static LAWS: OnceLock<Vec<Law>> = OnceLock::new();
    LAWS.get_or_init(|| {
        vec![
            mk(
                law::ZERO_A_STAR,
                &[B],
                Term::zero_a().pow(v(0)),
                Term::zero_a(),
            ),
            mk(
                law::ZERO_B_DUAL,
                &[A],
                Term::zero_b().pow(v(0)),
                Term::zero_a(),
            ),
            mk(
                law::DUAL_ZERO_A,
                &[B],
                v(0).pow(Term::zero_a()),
                Term::zero_a(),
            ),
            star_unit_law().clone(),
        ]
    })
}

pub fn star_unit_law() -> &'static Law {
    static LAW: OnceLock<Law> = OnceLock::new();
    LAW.get_or_init(|| mk(law::STAR_UNIT, &[A], v(0).pow(Term::zero_b()), v(0)))
}

/// The ten extra identities characterising derived actions between reduced
/// objects.
pub fn reduced_conditions() -> &'static [Law] {
    static LAWS: OnceLock<Vec<Law>> = OnceLock::new();
    LAWS.get_or_init(|| {
        let (a, a2, b, b2) = (|| v(0), || v(1), || v(2), || v(3));
        let vars = [A, A, B, B];
        vec![
            mk(law::R1, &vars, b().dot(a().pow(a2())), a().pow(a2())),
            mk(law::R2, &vars, a().pow(b()) + a2(), a2() + a().pow(b())),
            mk(law::R3, &vars, b().dot(a().pow(b2())), a().pow(b2())),
            mk(law::R4, &vars, a().pow(a2().pow(b())), a().pow(a2())),
            mk(law::R5, &vars, b().pow(b2()).dot(a()), a()),
            mk(law::R6, &vars, a().pow(b().pow(a2())), a()),
            mk(law::R7, &vars, b().pow(a().pow(a2())), b().pow(a())),
            mk(law::R8, &vars, b().pow(b2().pow(a())), Term::zero_a()),
            mk(law::R9, &vars, a().pow(b().pow(b2())), a().pow(b())),
            mk(law::R10, &vars, b().pow(a().pow(b2())), b().pow(a())),
        ]
    })
}

/// The shapes `(2_A)`, `(3_A)`, `(4_A)` take once the ten reduced
/// identities hold.
pub fn reduced_simplified_forms() -> &'static [Law] {
    static LAWS: OnceLock<Vec<Law>> = OnceLock::new();
    LAWS.get_or_init(|| {
        vec![
            {
                let (b, b2, a) = (|| v(0), || v(1), || v(2));
                mk(
                    law::A2_REDUCED,
                    &[B, B, A],
                    (b() + b2()).pow(a()),
                    b().pow(a()) + b2().pow(a()),
                )
            },
            {
                let (b, a, a2) = (|| v(0), || v(1), || v(2));
                mk(
                    law::A3_REDUCED,
                    &[B, A, A],
                    b().dot(a()).pow(a2()) + b().pow(a2()),
                    b().pow(a2()) + a().pow(a2()),
                )
            },
            {
                let (b, a, b2) = (|| v(0), || v(1), || v(2));
                mk(
                    law::A4_REDUCED,
                    &[B, A, B],
                    b().dot(a()).pow(b2()),
                    a().pow(b2()),
                )
            },
        ]
    })
}

/// Every law in every catalog, for lookup by identifier.
pub fn all_laws() -> impl Iterator<Item = &'static Law> {
    dot_action_laws()
        .iter()
        .chain(conditions_a())
        .chain(conditions_b())
        .chain(unit_and_zero_laws())
        .chain(reduced_conditions())
        .chain(reduced_simplified_forms())
}

pub fn find_law(id: &str) -> Option<&'static Law> {
    all_laws().find(|l| l.id() == id)
}

pub fn scan_laws(laws: &[Law], t: &ActionTriple, sink: &mut dyn LawSink) -> Scan {
    for l in laws {
        l.scan(t, sink)?;
    }
    ControlFlow::Continue(())
}

pub fn scan_unit_and_zero(t: &ActionTriple, sink: &mut dyn LawSink) -> Scan {
    scan_laws(unit_and_zero_laws(), t, sink)?;
    // The zero laws follow from (1_A), (2_A), (1_B) together with 0·a = a.
    let premises = [
        &conditions_a()[0],
        &conditions_a()[1],
        &conditions_b()[0],
        &dot_action_laws()[2],
    ];
    if premises.iter().all(|l| holds(|s| l.scan(t, s))) {
        for l in &unit_and_zero_laws()[..3] {
            let mut first = crate::report::Collector::new(1);
            let _ = l.scan(t, &mut first);
            if let Some(v) = first.finish().violations.into_iter().next() {
                sink.fail(&format!("{}{}", law::DERIVATION_PREFIX, l.id()), &v.witness)?;
            }
        }
    }
    ControlFlow::Continue(())
}

/// Dot group-action laws, `(1_A)`–`(4_A)`, `(1_B)`–`(4_B)` and `a^{0_B} = a`.
pub fn scan_derived(t: &ActionTriple, sink: &mut dyn LawSink) -> Scan {
    scan_laws(dot_action_laws(), t, sink)?;
    scan_laws(conditions_a(), t, sink)?;
    scan_laws(conditions_b(), t, sink)?;
    star_unit_law().scan(t, sink)
}

pub fn scan_derived_reduced(t: &ActionTriple, sink: &mut dyn LawSink) -> Scan {
    scan_derived(t, sink)?;
    scan_laws(reduced_conditions(), t, sink)
}

fn require_reduced(t: &ActionTriple) -> Result<()> {
    for g in [t.actor(), t.target()] {
        if !satisfies_reduced(g) {
            return Err(Error::NotReduced(g.name().to_owned()));
        }
    }
    Ok(())
}

impl Checker {
    pub fn check_dot_group_action(&self, t: &ActionTriple) -> CheckReport {
        self.run(|s| scan_laws(dot_action_laws(), t, s))
    }

    pub fn check_conditions_a(&self, t: &ActionTriple) -> CheckReport {
        self.run(|s| scan_laws(conditions_a(), t, s))
    }

    pub fn check_conditions_b(&self, t: &ActionTriple) -> CheckReport {
        self.run(|s| scan_laws(conditions_b(), t, s))
    }

    pub fn check_unit_and_zero(&self, t: &ActionTriple) -> CheckReport {
        self.run(|s| scan_unit_and_zero(t, s))
    }

    pub fn is_derived_action(&self, t: &ActionTriple) -> CheckReport {
        self.run(|s| scan_derived(t, s))
    }

    pub fn check_reduced_conditions(&self, t: &ActionTriple) -> Result<CheckReport> {
        require_reduced(t)?;
        Ok(self.run(|s| scan_laws(reduced_conditions(), t, s)))
    }

    pub fn is_derived_action_reduced(&self, t: &ActionTriple) -> Result<CheckReport> {
        require_reduced(t)?;
        Ok(self.run(|s| scan_derived_reduced(t, s)))
    }
}

/// Group-action laws of `dot`: additivity, composition, unit.
pub fn check_dot_group_action(t: &ActionTriple) -> CheckReport {
    Checker::default().check_dot_group_action(t)
}

pub fn check_conditions_a(t: &ActionTriple) -> CheckReport {
    Checker::default().check_conditions_a(t)
}

pub fn check_conditions_b(t: &ActionTriple) -> CheckReport {
    Checker::default().check_conditions_b(t)
}

/// The four unit/zero laws. When `(1_A)`, `(2_A)`, `(1_B)` and `0·a = a`
/// hold, a failure of one of the first three is additionally reported
/// under `derivation: <law>`; that entry must never appear.
pub fn check_unit_and_zero(t: &ActionTriple) -> CheckReport {
    Checker::default().check_unit_and_zero(t)
}

pub fn is_derived_action(t: &ActionTriple) -> CheckReport {
    Checker::default().is_derived_action(t)
}

/// Fails with [`Error::NotReduced`] if either algebra is not reduced.
pub fn check_reduced_conditions(t: &ActionTriple) -> Result<CheckReport> {
    Checker::default().check_reduced_conditions(t)
}

pub fn is_derived_action_reduced(t: &ActionTriple) -> Result<CheckReport> {
    Checker::default().is_derived_action_reduced(t)
}

pub fn satisfies_derived(t: &ActionTriple) -> bool {
    holds(|s| scan_derived(t, s))
}

/// No reducedness precondition is checked.
pub fn satisfies_derived_reduced(t: &ActionTriple) -> bool {
    holds(|s| scan_derived_reduced(t, s))
}

fn require_gwa(a: &FiniteGwa) -> Result<()> {
    let r = validate_gwa(a);
    if r.ok {
        Ok(())
    } else {
        Err(Error::InvalidAlgebra {
            name: a.name().to_owned(),
            reason: r.to_string().trim_end().replace('\n', "; "),
        })
    }
}

/// `A` acting on itself: `b·a = b + a - b`, `a^b` the internal action, and
/// dual `b^a - b`.
pub fn self_action(a: &Arc<FiniteGwa>) -> Result<ActionTriple> {
    require_gwa(a)?;
    let g = a.clone();
    ActionTriple::from_fn(
        a.clone(),
        a.clone(),
        |x, y| g.sub(g.add(x, y), x),
        |x, y| g.act(x, y),
        |x, y| g.sub(g.act(x, y), x),
    )
}

/// Like [`self_action`] but with dual `b^a` instead of `b^a - b`; this is
/// not a derived action as soon as `|A| > 1`.
pub fn naive_self_action(a: &Arc<FiniteGwa>) -> Result<ActionTriple> {
    let g = a.clone();
    ActionTriple::from_fn(
        a.clone(),
        a.clone(),
        |x, y| g.sub(g.add(x, y), x),
        |x, y| g.act(x, y),
        |x, y| g.act(x, y),
    )
}

/// The ideal `I` as an algebra in its own right. Member `k` (ascending) of
/// `I` becomes element `k`.
pub fn sub_object(i: &SubsetMask) -> Result<FiniteGwa> {
    let parent = i.parent();
    let members = i.indices();
    let mut index = vec![usize::MAX; parent.order()];
    for (k, &m) in members.iter().enumerate() {
        index[m] = k;
    }
    let m = members.len();
    let pick = |x: usize, what: &str| -> Result<usize> {
        match index[x] {
            usize::MAX => Err(Error::NotAnIdeal(format!(
                "{what} leaves the subset at {x}"
            ))),
            k => Ok(k),
        }
    };
    let mut add = Vec::with_capacity(m * m);
    let mut act = Vec::with_capacity(m * m);
    for &x in &members {
        for &y in &members {
            add.push(pick(parent.add(x, y), "addition")?);
            act.push(pick(parent.act(x, y), "action")?);
        }
    }
    let neg = members
        .iter()
        .map(|&x| pick(parent.neg(x), "negation"))
        .collect::<Result<Vec<_>>>()?;
    let name = format!("{}|{:?}", parent.name(), members);
    FiniteGwa::from_group(GroupTable::from_flat(name, m, add, neg), act)
}

/// `A` acting on an ideal `I`: `a·i = a + i - a`, `i^a`, and `a^i - a`.
pub fn ideal_action(i: &SubsetMask) -> Result<ActionTriple> {
    let report = is_ideal(i);
    if !report.ok {
        return Err(Error::NotAnIdeal(
            report.to_string().trim_end().replace('\n', "; "),
        ));
    }
    let a = i.parent().clone();
    let sub = Arc::new(sub_object(i)?);
    let members = i.indices();
    let mut index = vec![usize::MAX; a.order()];
    for (k, &m) in members.iter().enumerate() {
        index[m] = k;
    }
    let into = |x: usize| -> Result<usize> {
        match index[x] {
            usize::MAX => Err(Error::NotAnIdeal(format!(
                "element {x} is outside the ideal"
            ))),
            k => Ok(k),
        }
    };
    let (na, ni) = (a.order(), members.len());
    let mut dot = Vec::with_capacity(na * ni);
    let mut dual = Vec::with_capacity(na * ni);
    for g in 0..na {
        for &x in &members {
            dot.push(into(a.sub(a.add(g, x), g))?);
            dual.push(into(a.sub(a.act(g, x), g))?);
        }
    }
    let mut star = Vec::with_capacity(ni * na);
    for &x in &members {
        for g in 0..na {
            star.push(into(a.act(x, g))?);
        }
    }
    ActionTriple::from_flat(a, sub, dot, star, dual)
}
