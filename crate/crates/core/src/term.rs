//! Two-sorted terms over an action of `B` on `A`.
//!
//! Variables range over the carrier of `A` or of `B`. Exponentiation is
//! resolved by the sorts of its operands:
//!
//! | base | exponent | meaning               | result |
//! |------|----------|-----------------------|--------|
//! | A    | A        | internal action of A  | A      |
//! | A    | B        | `star`, `a^b`         | A      |
//! | B    | A        | `dual`, `b^a`         | A      |
//! | B    | B        | internal action of B  | B      |
//!
//! `b·a` (the `dot` table) takes a `B` on the left and an `A` on the right.
//! A [`Law`] is an equation between two terms, compiled once into postfix
//! code and then checked over every assignment of its variables.

use std::fmt;
use std::ops::{Add, ControlFlow, Neg, Sub};

use crate::actions::ActionTriple;
use crate::error::{Error, Result};
use crate::report::{LawSink, Scan};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sort {
    A,
    B,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Var(usize),
    Zero(Sort),
    Add(Box<Term>, Box<Term>),
    Neg(Box<Term>),
    Dot(Box<Term>, Box<Term>),
    Pow(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(i: usize) -> Term {
        Term::Var(i)
    }

    pub fn zero_a() -> Term {
        Term::Zero(Sort::A)
    }

    pub fn zero_b() -> Term {
        Term::Zero(Sort::B)
    }

    /// `self · rhs`.
    pub fn dot(self, rhs: Term) -> Term {
        Term::Dot(Box::new(self), Box::new(rhs))
    }

    /// `self ^ rhs`, resolved by sorts.
    pub fn pow(self, rhs: Term) -> Term {
        Term::Pow(Box::new(self), Box::new(rhs))
    }

    fn sort(&self, vars: &[Sort]) -> std::result::Result<Sort, String> {
        match self {
            Term::Var(i) => vars
                .get(*i)
                .copied()
                .ok_or_else(|| format!("variable {i} is not declared")),
            Term::Zero(s) => Ok(*s),
            Term::Add(x, y) => {
                let (sx, sy) = (x.sort(vars)?, y.sort(vars)?);
                if sx == sy {
                    Ok(sx)
                } else {
                    Err(format!("sum of {sx:?} and {sy:?}"))
                }
            }
            Term::Neg(x) => x.sort(vars),
            Term::Dot(x, y) => match (x.sort(vars)?, y.sort(vars)?) {
                (Sort::B, Sort::A) => Ok(Sort::A),
                (sx, sy) => Err(format!("dot of {sx:?} on {sy:?}")),
            },
            Term::Pow(x, y) => match (x.sort(vars)?, y.sort(vars)?) {
                (Sort::B, Sort::B) => Ok(Sort::B),
                _ => Ok(Sort::A),
            },
        }
    }

    fn compile(&self, vars: &[Sort], code: &mut Vec<Op>) -> std::result::Result<Sort, String> {
        let sort = self.sort(vars)?;
        match self {
            Term::Var(i) => code.push(Op::Var(*i)),
            Term::Zero(_) => code.push(Op::Zero),
            Term::Add(x, y) => {
                x.compile(vars, code)?;
                y.compile(vars, code)?;
                code.push(if sort == Sort::A { Op::AddA } else { Op::AddB });
            }
            Term::Neg(x) => {
                x.compile(vars, code)?;
                code.push(if sort == Sort::A { Op::NegA } else { Op::NegB });
            }
            Term::Dot(x, y) => {
                x.compile(vars, code)?;
                y.compile(vars, code)?;
                code.push(Op::Dot);
            }
            Term::Pow(x, y) => {
                let op = match (x.sort(vars)?, y.sort(vars)?) {
                    (Sort::A, Sort::A) => Op::ActA,
                    (Sort::A, Sort::B) => Op::Star,
                    (Sort::B, Sort::A) => Op::Dual,
                    (Sort::B, Sort::B) => Op::ActB,
                };
                x.compile(vars, code)?;
                y.compile(vars, code)?;
                code.push(op);
            }
        }
        Ok(sort)
    }
}

impl Add for Term {
    type Output = Term;

    fn add(self, rhs: Term) -> Term {
        Term::Add(Box::new(self), Box::new(rhs))
    }
}

impl Sub for Term {
    type Output = Term;

    fn sub(self, rhs: Term) -> Term {
        self + (-rhs)
    }
}

impl Neg for Term {
    type Output = Term;

    fn neg(self) -> Term {
        Term::Neg(Box::new(self))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Op {
    Var(usize),
    Zero,
    AddA,
    AddB,
    NegA,
    NegB,
    Dot,
    ActA,
    ActB,
    Star,
    Dual,
}

fn run(code: &[Op], t: &ActionTriple, vals: &[usize], stack: &mut Vec<usize>) -> usize {
    let (a, b) = (t.target(), t.actor());
    stack.clear();
    for op in code {
        let v = match *op {
            Op::Var(i) => vals[i],
            Op::Zero => 0,
            Op::NegA => {
                let x = stack.pop().unwrap();
                a.neg(x)
            }
            Op::NegB => {
                let x = stack.pop().unwrap();
                b.neg(x)
            }
            binary => {
                let y = stack.pop().unwrap();
                let x = stack.pop().unwrap();
                match binary {
                    Op::AddA => a.add(x, y),
                    Op::AddB => b.add(x, y),
                    Op::Dot => t.dot(x, y),
                    Op::ActA => a.act(x, y),
                    Op::ActB => b.act(x, y),
                    Op::Star => t.star(x, y),
                    Op::Dual => t.dual(x, y),
                    _ => unreachable!(),
                }
            }
        };
        stack.push(v);
    }
    debug_assert_eq!(stack.len(), 1);
    stack[0]
}

/// A universally quantified equation `lhs = rhs` over typed variables.
#[derive(Clone, Debug)]
pub struct Law {
    id: String,
    vars: Vec<Sort>,
    lhs: Term,
    rhs: Term,
    sort: Sort,
    lhs_code: Vec<Op>,
    rhs_code: Vec<Op>,
}

impl Law {
    pub fn new(id: impl Into<String>, vars: &[Sort], lhs: Term, rhs: Term) -> Result<Law> {
        let id = id.into();
        let ill = |reason: String| Error::IllSorted {
            law: id.clone(),
            reason,
        };
        let mut lhs_code = Vec::new();
        let mut rhs_code = Vec::new();
        let sl = lhs.compile(vars, &mut lhs_code).map_err(ill)?;
        let sr = rhs.compile(vars, &mut rhs_code).map_err(ill)?;
        if sl != sr {
            return Err(ill(format!("sides have sorts {sl:?} and {sr:?}")));
        }
        Ok(Law {
            id,
            vars: vars.to_vec(),
            lhs,
            rhs,
            sort: sl,
            lhs_code,
            rhs_code,
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn vars(&self) -> &[Sort] {
        &self.vars
    }

    pub fn sort(&self) -> Sort {
        self.sort
    }

    pub fn lhs(&self) -> &Term {
        &self.lhs
    }

    pub fn rhs(&self) -> &Term {
        &self.rhs
    }

    /// Both sides evaluated at one assignment.
    pub fn eval(&self, t: &ActionTriple, vals: &[usize]) -> (usize, usize) {
        let mut stack = Vec::with_capacity(8);
        let l = run(&self.lhs_code, t, vals, &mut stack);
        let r = run(&self.rhs_code, t, vals, &mut stack);
        (l, r)
    }

    pub fn holds_at(&self, t: &ActionTriple, vals: &[usize]) -> bool {
        let (l, r) = self.eval(t, vals);
        l == r
    }

    /// Checks the law at every assignment, first variable slowest.
    pub fn scan(&self, t: &ActionTriple, sink: &mut dyn LawSink) -> Scan {
        let radix: Vec<usize> = self
            .vars
            .iter()
            .map(|s| match s {
                Sort::A => t.target().order(),
                Sort::B => t.actor().order(),
            })
            .collect();
        let mut vals = vec![0usize; radix.len()];
        let mut stack = Vec::with_capacity(8);
        loop {
            let l = run(&self.lhs_code, t, &vals, &mut stack);
            let r = run(&self.rhs_code, t, &vals, &mut stack);
            if l != r {
                sink.fail(&self.id, &vals)?;
            }
            let mut k = vals.len();
            loop {
                if k == 0 {
                    return ControlFlow::Continue(());
                }
                k -= 1;
                vals[k] += 1;
                if vals[k] < radix[k] {
                    break;
                }
                vals[k] = 0;
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(i) => write!(f, "x{i}"),
            Term::Zero(Sort::A) => f.write_str("0_A"),
            Term::Zero(Sort::B) => f.write_str("0_B"),
            Term::Add(x, y) => write!(f, "({x} + {y})"),
            Term::Neg(x) => write!(f, "-{x}"),
            Term::Dot(x, y) => write!(f, "{x}·{y}"),
            Term::Pow(x, y) => write!(f, "{x}^{{{y}}}"),
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} = {}", self.id, self.lhs, self.rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ill_sorted_laws_are_rejected() {
        let a = || Term::var(0);
        let b = || Term::var(1);
        let vars = [Sort::A, Sort::B];
        assert!(Law::new("mixed sum", &vars, a() + b(), a()).is_err());
        assert!(Law::new("dot backwards", &vars, a().dot(b()), a()).is_err());
        assert!(Law::new("sort mismatch", &vars, b().pow(b()), a()).is_err());
        assert!(Law::new("undeclared", &vars, Term::var(2), a()).is_err());
        let ok = Law::new("dual", &vars, b().pow(a()), Term::zero_a()).unwrap();
        assert_eq!(ok.sort(), Sort::A);
    }
}
