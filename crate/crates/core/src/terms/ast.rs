use std::collections::BTreeSet;
use std::fmt;

/// A term over the signature `{·, ∧, ∨, 1, ^l, ^r}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(String),
    One,
    Mul(Box<Term>, Box<Term>),
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
    Resl(Box<Term>),
    Resr(Box<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn mul(self, other: Term) -> Term {
        Term::Mul(Box::new(self), Box::new(other))
    }

    pub fn meet(self, other: Term) -> Term {
        Term::Meet(Box::new(self), Box::new(other))
    }

    pub fn join(self, other: Term) -> Term {
        Term::Join(Box::new(self), Box::new(other))
    }

    pub fn resl(self) -> Term {
        Term::Resl(Box::new(self))
    }

    pub fn resr(self) -> Term {
        Term::Resr(Box::new(self))
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::One => {}
            Term::Mul(a, b) | Term::Meet(a, b) | Term::Join(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Term::Resl(a) | Term::Resr(a) => a.collect_vars(out),
        }
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) | Term::One => 1,
            Term::Mul(a, b) | Term::Meet(a, b) | Term::Join(a, b) => 1 + a.size() + b.size(),
            Term::Resl(a) | Term::Resr(a) => 1 + a.size(),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Term::Join(..) => 0,
            Term::Meet(..) => 1,
            Term::Mul(..) => 2,
            Term::Resl(_) | Term::Resr(_) => 3,
            Term::Var(_) | Term::One => 4,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            f.write_str("(")?;
            self.fmt_at(f, 0)?;
            return f.write_str(")");
        }
        match self {
            Term::Var(v) => f.write_str(v),
            Term::One => f.write_str("1"),
            // all binary operators associate to the left
            Term::Join(a, b) => {
                a.fmt_at(f, 0)?;
                f.write_str(" | ")?;
                b.fmt_at(f, 1)
            }
            Term::Meet(a, b) => {
                a.fmt_at(f, 1)?;
                f.write_str(" & ")?;
                b.fmt_at(f, 2)
            }
            Term::Mul(a, b) => {
                a.fmt_at(f, 2)?;
                f.write_str(" ")?;
                b.fmt_at(f, 3)
            }
            Term::Resl(_) | Term::Resr(_) => {
                let mut suffix = Vec::new();
                let mut base = self;
                loop {
                    base = match base {
                        Term::Resl(a) => {
                            suffix.push('l');
                            a
                        }
                        Term::Resr(a) => {
                            suffix.push('r');
                            a
                        }
                        _ => break,
                    };
                }
                base.fmt_at(f, 4)?;
                f.write_str("^")?;
                suffix.reverse();
                f.write_str(&suffix.into_iter().collect::<String>())
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `s = t`
    Eq,
    /// `s <= t`, i.e. `s ∧ t = s`
    Leq,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Equation {
    pub lhs: Term,
    pub rhs: Term,
    pub kind: Relation,
}

impl Equation {
    pub fn eq(lhs: Term, rhs: Term) -> Self {
        Equation { lhs, rhs, kind: Relation::Eq }
    }

    pub fn leq(lhs: Term, rhs: Term) -> Self {
        Equation { lhs, rhs, kind: Relation::Leq }
    }

    /// Variables of both sides, sorted by name.
    pub fn vars(&self) -> BTreeSet<String> {
        let mut v = self.lhs.vars();
        v.extend(self.rhs.vars());
        v
    }

    /// A single term `u` with `self` equivalent to `1 <= u`.
    ///
    /// `s <= t` iff `1 <= t s^l` (residuation with `a^l a <= 1 <= a a^l`), and an
    /// equation is the meet of its two inequalities.
    pub fn normalize(&self) -> Term {
        let (s, t) = (&self.lhs, &self.rhs);
        let below = |a: &Term, b: &Term| b.clone().mul(a.clone().resl());
        match self.kind {
            Relation::Leq => below(s, t),
            Relation::Eq => below(s, t).meet(below(t, s)),
        }
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.kind {
            Relation::Eq => "=",
            Relation::Leq => "<=",
        };
        write!(f, "{} {} {}", self.lhs, op, self.rhs)
    }
}
