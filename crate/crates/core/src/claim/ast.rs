use std::fmt;

use serde::Serialize;

use crate::characterizations::RelOp;

/// What a quantified variable ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Sort {
    Open,
    Closed,
    Set,
}

impl Sort {
    pub fn keyword(self) -> &'static str {
        match self {
            Sort::Open => "open",
            Sort::Closed => "closed",
            Sort::Set => "set",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Binding {
    pub sort: Sort,
    pub name: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Var(String),
    Empty,
    Full,
    Complement(Box<Expr>),
    Closure(Box<Expr>),
    Interior(Box<Expr>),
    Union(Box<Expr>, Box<Expr>),
    Intersection(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub lhs: Expr,
    pub op: RelOp,
    pub rhs: Expr,
}

/// A universally quantified identity over one space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Claim {
    pub bindings: Vec<Binding>,
    pub side_conditions: Vec<Relation>,
    pub body: Relation,
}

impl Expr {
    pub fn visit_vars<'a>(&'a self, f: &mut impl FnMut(&'a str)) {
        match self {
            Expr::Var(name) => f(name),
            Expr::Empty | Expr::Full => {}
            Expr::Complement(e) | Expr::Closure(e) | Expr::Interior(e) => e.visit_vars(f),
            Expr::Union(l, r) | Expr::Intersection(l, r) => {
                l.visit_vars(f);
                r.visit_vars(f);
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Union(..) => 1,
            Expr::Intersection(..) => 2,
            _ => 3,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let parens = self.precedence() < min;
        if parens {
            f.write_str("(")?;
        }
        match self {
            Expr::Var(name) => f.write_str(name)?,
            Expr::Empty => f.write_str("empty")?,
            Expr::Full => f.write_str("X")?,
            Expr::Complement(e) => write!(f, "cmp({e})")?,
            Expr::Closure(e) => write!(f, "cl({e})")?,
            Expr::Interior(e) => write!(f, "int({e})")?,
            // Both operators associate to the left.
            Expr::Union(l, r) => {
                l.fmt_at(f, 1)?;
                f.write_str(" | ")?;
                r.fmt_at(f, 2)?;
            }
            Expr::Intersection(l, r) => {
                l.fmt_at(f, 2)?;
                f.write_str(" & ")?;
                r.fmt_at(f, 3)?;
            }
        }
        if parens {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.lhs, self.op.symbol(), self.rhs)
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("forall ")?;
        for (i, b) in self.bindings.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{} {}", b.sort.keyword(), b.name)?;
        }
        for (i, r) in self.side_conditions.iter().enumerate() {
            f.write_str(if i == 0 { " with " } else { ", " })?;
            write!(f, "{r}")?;
        }
        write!(f, " : {}", self.body)
    }
}
