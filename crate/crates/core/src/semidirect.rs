//! Semi-direct products `B ⋉ A` and split extensions.
//!
//! The carrier of `B ⋉ A` is `B × A`, with the pair `(b, a)` stored as index
//! `b * |A| + a`, so `(0, 0)` is element 0. The operations are
//!
//! ```text
//! (b, a) + (b', a')   = (b + b', a + b·a')
//! (b, a)^(b', a')     = (b^b', (a^a')^b' + (b^a')^b')
//! -(b, a)             = (-b, (-b)·(-a))
//! ```
//!
//! The negation is not part of the defining data; it is the inverse forced
//! by the addition whenever `dot` is an action by automorphisms, and the
//! group check verifies it like any other table.

use std::sync::Arc;

use crate::actions::ActionTriple;
use crate::algebra::{
    is_morphism, satisfies_gwa, satisfies_reduced, scan_gwa, scan_reduced, FiniteGwa, GwaMorphism,
};
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::report::{CheckReport, Checker};

/// Which category the product is validated in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Gwa,
    Reduced,
}

#[derive(Clone, Debug)]
pub struct SemidirectCandidate {
    pub triple: ActionTriple,
    pub product: Arc<FiniteGwa>,
    pub validated: bool,
}

impl SemidirectCandidate {
    /// Fills the product tables from the triple. No law is checked.
    pub fn from_triple(t: &ActionTriple) -> Self {
        let (b, a) = (t.actor(), t.target());
        let (nb, na) = (b.order(), a.order());
        let n = nb * na;
        let pair = |x: usize, y: usize| x * na + y;
        let mut add = vec![0; n * n];
        let mut act = vec![0; n * n];
        let mut neg = vec![0; n];
        for b1 in 0..nb {
            for a1 in 0..na {
                let p = pair(b1, a1);
                let nb1 = b.neg(b1);
                neg[p] = pair(nb1, t.dot(nb1, a.neg(a1)));
                for b2 in 0..nb {
                    for a2 in 0..na {
                        let q = pair(b2, a2);
                        add[p * n + q] = pair(b.add(b1, b2), a.add(a1, t.dot(b1, a2)));
                        let left = t.star(a.act(a1, a2), b2);
                        let right = t.star(t.dual(b1, a2), b2);
                        act[p * n + q] = pair(b.act(b1, b2), a.add(left, right));
                    }
                }
            }
        }
        let name = format!("{}⋉{}", b.name(), a.name());
        let group = GroupTable::from_flat(name, n, add, neg);
        let product = FiniteGwa::from_group(group, act).expect("product tables are in range");
        SemidirectCandidate {
            triple: t.clone(),
            product: Arc::new(product),
            validated: false,
        }
    }

    pub fn actor(&self) -> &Arc<FiniteGwa> {
        self.triple.actor()
    }

    pub fn target(&self) -> &Arc<FiniteGwa> {
        self.triple.target()
    }

    #[inline]
    pub fn pair(&self, b: usize, a: usize) -> usize {
        b * self.target().order() + a
    }

    #[inline]
    pub fn unpair(&self, p: usize) -> (usize, usize) {
        let na = self.target().order();
        (p / na, p % na)
    }

    /// Runs [`validate_candidate`] and records the verdict.
    pub fn validate(&mut self, mode: Mode) -> CheckReport {
        let r = validate_candidate(self, mode);
        self.validated = r.ok;
        r
    }
}

/// Builds the candidate for explicitly given algebras; the triple's tables
/// must fit `b` acting on `a`.
pub fn build_semidirect(
    b: &Arc<FiniteGwa>,
    a: &Arc<FiniteGwa>,
    t: &ActionTriple,
) -> Result<SemidirectCandidate> {
    for (what, expected, found) in [
        ("actor order", b.order(), t.actor().order()),
        ("target order", a.order(), t.target().order()),
    ] {
        if expected != found {
            return Err(Error::Dimension {
                what: what.into(),
                expected,
                found,
            });
        }
    }
    let rebound = ActionTriple::from_flat(
        b.clone(),
        a.clone(),
        t.dot_flat().to_vec(),
        t.star_flat().to_vec(),
        t.dual_flat().to_vec(),
    )?;
    Ok(SemidirectCandidate::from_triple(&rebound))
}

impl Checker {
    pub fn validate_candidate(&self, c: &SemidirectCandidate, mode: Mode) -> CheckReport {
        self.run(|s| {
            scan_gwa(&c.product, s)?;
            match mode {
                Mode::Gwa => std::ops::ControlFlow::Continue(()),
                Mode::Reduced => scan_reduced(&c.product, s),
            }
        })
    }
}

/// The product is an object of the chosen category.
pub fn validate_candidate(c: &SemidirectCandidate, mode: Mode) -> CheckReport {
    Checker::default().validate_candidate(c, mode)
}

pub fn candidate_holds(c: &SemidirectCandidate, mode: Mode) -> bool {
    satisfies_gwa(&c.product) && (mode == Mode::Gwa || satisfies_reduced(&c.product))
}

/// Whether the canonical extension of `c` induces exactly `c.triple`,
/// computed directly on the product tables. [`roundtrip_check`] reaches the
/// same verdict through explicit morphisms.
pub fn reproduces_triple(c: &SemidirectCandidate) -> bool {
    let e = &c.product;
    let t = &c.triple;
    let (nb, na) = (c.actor().order(), c.target().order());
    for b in 0..nb {
        let jb = c.pair(b, 0);
        let njb = e.neg(jb);
        for a in 0..na {
            if e.add(e.add(jb, a), njb) != t.dot(b, a)
                || e.add(e.act(jb, a), njb) != t.dual(b, a)
                || e.act(a, jb) != t.star(a, b)
            {
                return false;
            }
        }
    }
    true
}

/// `0 → A --i--> E --p--> B → 0` with a section `j` of `p`.
#[derive(Clone, Debug)]
pub struct SplitExtension {
    pub a: Arc<FiniteGwa>,
    pub e: Arc<FiniteGwa>,
    pub b: Arc<FiniteGwa>,
    pub i: GwaMorphism,
    pub p: GwaMorphism,
    pub j: GwaMorphism,
}

impl SplitExtension {
    /// Checks every invariant: the three maps are morphisms between the
    /// right objects, `p` is onto, `i` is one-to-one with image `ker p`, and
    /// `p ∘ j = id`.
    pub fn new(i: GwaMorphism, p: GwaMorphism, j: GwaMorphism) -> Result<Self> {
        let bad = |m: &str| Err(Error::InvalidExtension(m.to_owned()));
        if i.target != p.source || p.target != j.source || j.target != p.source {
            return bad("maps do not compose as A -> E -> B -> E");
        }
        for (name, f) in [("i", &i), ("p", &p), ("j", &j)] {
            let r = is_morphism(f);
            if !r.ok {
                return Err(Error::InvalidExtension(format!(
                    "{name} is not a morphism: {}",
                    r.violations[0]
                )));
            }
        }
        if !p.is_surjective() {
            return bad("p is not surjective");
        }
        if !i.is_injective() {
            return bad("i is not injective");
        }
        let mut image = vec![false; p.source.order()];
        for &x in &i.map {
            image[x] = true;
        }
        if (0..image.len()).any(|x| image[x] != (p.apply(x) == 0)) {
            return bad("image of i differs from kernel of p");
        }
        if (0..j.source.order()).any(|b| p.apply(j.apply(b)) != b) {
            return bad("p ∘ j is not the identity");
        }
        Ok(SplitExtension {
            a: i.source.clone(),
            e: p.source.clone(),
            b: p.target.clone(),
            i,
            p,
            j,
        })
    }
}

/// `p(b,a) = b`, `i(a) = (0,a)`, `j(b) = (b,0)`.
pub fn canonical_split_extension(c: &SemidirectCandidate) -> Result<SplitExtension> {
    let r = validate_candidate(c, Mode::Gwa);
    if !r.ok {
        return Err(Error::CandidateInvalid(
            r.to_string().trim_end().replace('\n', "; "),
        ));
    }
    let (nb, na) = (c.actor().order(), c.target().order());
    let e = c.product.clone();
    let i = GwaMorphism::new(
        c.target().clone(),
        e.clone(),
        (0..na).map(|a| c.pair(0, a)).collect(),
    )?;
    let p = GwaMorphism::new(
        e.clone(),
        c.actor().clone(),
        (0..nb * na).map(|x| x / na).collect(),
    )?;
    let j = GwaMorphism::new(
        c.actor().clone(),
        e,
        (0..nb).map(|b| c.pair(b, 0)).collect(),
    )?;
    SplitExtension::new(i, p, j)
}

/// Reads off `b·a = j(b) + a - j(b)`, `b^a = j(b)^a - j(b)` and
/// `a^b = a^{j(b)}`, pulled back along `i`.
pub fn extract_derived_actions(x: &SplitExtension) -> Result<ActionTriple> {
    let e = &x.e;
    let (na, nb) = (x.a.order(), x.b.order());
    let mut preimage = vec![usize::MAX; e.order()];
    for a in 0..na {
        preimage[x.i.apply(a)] = a;
    }
    let back = |y: usize, b: usize, a: usize| -> Result<usize> {
        match preimage[y] {
            usize::MAX => Err(Error::NotInKernelImage { b, a }),
            k => Ok(k),
        }
    };
    let mut dot = Vec::with_capacity(nb * na);
    let mut dual = Vec::with_capacity(nb * na);
    for b in 0..nb {
        let jb = x.j.apply(b);
        let njb = e.neg(jb);
        for a in 0..na {
            let ia = x.i.apply(a);
            dot.push(back(e.add(e.add(jb, ia), njb), b, a)?);
            dual.push(back(e.add(e.act(jb, ia), njb), b, a)?);
        }
    }
    let mut star = Vec::with_capacity(na * nb);
    for a in 0..na {
        for b in 0..nb {
            star.push(back(e.act(x.i.apply(a), x.j.apply(b)), b, a)?);
        }
    }
    ActionTriple::from_flat(x.b.clone(), x.a.clone(), dot, star, dual)
}

/// Builds `B ⋉ A`, takes its canonical split extension and compares the
/// derived actions with `t` cell by cell. Laws `roundtrip-dot`,
/// `roundtrip-star`, `roundtrip-dual` carry the differing cell.
pub fn roundtrip_check(t: &ActionTriple) -> Result<CheckReport> {
    let c = SemidirectCandidate::from_triple(t);
    let x = canonical_split_extension(&c)?;
    let back = extract_derived_actions(&x)?;
    let (nb, na) = (t.actor().order(), t.target().order());
    Ok(Checker::default().run(|s| {
        use crate::report::expect;
        for b in 0..nb {
            for a in 0..na {
                expect(s, back.dot(b, a) == t.dot(b, a), "roundtrip-dot", &[b, a])?;
            }
        }
        for a in 0..na {
            for b in 0..nb {
                expect(
                    s,
                    back.star(a, b) == t.star(a, b),
                    "roundtrip-star",
                    &[a, b],
                )?;
            }
        }
        for b in 0..nb {
            for a in 0..na {
                expect(
                    s,
                    back.dual(b, a) == t.dual(b, a),
                    "roundtrip-dual",
                    &[b, a],
                )?;
            }
        }
        std::ops::ControlFlow::Continue(())
    }))
}

pub fn roundtrip_holds(t: &ActionTriple) -> bool {
    roundtrip_check(t).map(|r| r.ok).unwrap_or(false)
}

/// Gwa-validity of the product combined with [`reproduces_triple`].
pub fn product_induces_triple(c: &SemidirectCandidate, mode: Mode) -> bool {
    candidate_holds(c, mode) && reproduces_triple(c)
}
