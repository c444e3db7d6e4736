//! Characterizations of extremally disconnected spaces and the closure
//! identities that accompany them, each as an exhaustive, witness-producing
//! check over a single finite topology.
//!
//! Variables are enumerated left to right with the first binding outermost.
//! Arbitrary subsets ascend by mask value; open sets follow the topology's
//! normalized order and closed sets the order of the opens they complement.
//! The first failing assignment is returned, so witnesses are deterministic.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::point_set::PointSet;
use crate::topology::Topology;

/// Relation between the two sides of an identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RelOp {
    Equals,
    SubsetOf,
}

impl RelOp {
    #[inline]
    pub fn holds(self, lhs: u32, rhs: u32) -> bool {
        match self {
            RelOp::Equals => lhs == rhs,
            RelOp::SubsetOf => lhs & !rhs == 0,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            RelOp::Equals => "=",
            RelOp::SubsetOf => "<=",
        }
    }
}

/// A failing assignment together with both evaluated sides of the relation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Witness {
    pub assignment: Vec<(String, PointSet)>,
    pub lhs: PointSet,
    pub op: RelOp,
    pub rhs: PointSet,
}

impl Witness {
    pub fn get(&self, name: &str) -> Option<PointSet> {
        self.assignment.iter().find(|(v, _)| v == name).map(|&(_, s)| s)
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (name, set)) in self.assignment.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{name} = {set}")?;
        }
        write!(f, "; lhs = {}, rhs = {}, expected lhs {} rhs", self.lhs, self.rhs, self.op.symbol())
    }
}

/// Every statement with a native check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statement {
    /// The closure of every open set is open.
    A,
    B,
    C,
    D,
    /// `int(cl K) ∩ cl A = int(cl(K ∩ A))` for every subset `K` and open `A`.
    E,
    F,
    G,
    Lemma1,
    Corollary2,
    /// `A ∩ int(cl B) ⊆ cl(A ∩ B)` for every subset `A` and open `B`.
    Hint,
    /// As [`Statement::Hint`] with `A` restricted to open sets.
    HintOpen,
    /// Condition (e) restricted to disjoint `K` and `A`. The right-hand side
    /// is then empty and the identity holds in every space.
    EPrinted,
}

impl Statement {
    /// The seven equivalent characterizations.
    pub const CONDITIONS: [Statement; 7] =
        [Statement::A, Statement::B, Statement::C, Statement::D, Statement::E, Statement::F, Statement::G];

    pub const ALL: [Statement; 12] = [
        Statement::A,
        Statement::B,
        Statement::C,
        Statement::D,
        Statement::E,
        Statement::F,
        Statement::G,
        Statement::Lemma1,
        Statement::Corollary2,
        Statement::Hint,
        Statement::HintOpen,
        Statement::EPrinted,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Statement::A => "a",
            Statement::B => "b",
            Statement::C => "c",
            Statement::D => "d",
            Statement::E => "e",
            Statement::F => "f",
            Statement::G => "g",
            Statement::Lemma1 => "lemma1",
            Statement::Corollary2 => "corollary2",
            Statement::Hint => "hint",
            Statement::HintOpen => "hint-open",
            Statement::EPrinted => "e-printed",
        }
    }

    /// The statement in claim syntax. Variable names and binding order
    /// match the native check, so witnesses coincide.
    pub fn claim_text(self) -> &'static str {
        match self {
            Statement::A => "forall open A : cl(A) = int(cl(A))",
            Statement::B => "forall open A, open B : cl(A) & cl(B) = cl(A & B)",
            Statement::C => "forall open A, open B with A & B = empty : cl(A) & cl(B) = empty",
            Statement::D => "forall set K, open A with K & A = empty : cl(int(cl(K))) & cl(A) = empty",
            Statement::E => "forall set K, open A : int(cl(K)) & cl(A) = int(cl(K & A))",
            Statement::F => "forall open A, open B : int(cl(A)) | int(cl(B)) = int(cl(A | B))",
            Statement::G => "forall closed G, closed H : int(G) | int(H) = int(G | H)",
            Statement::Lemma1 => "forall set A, open B : int(cl(A)) & int(cl(B)) = int(cl(A & B))",
            Statement::Corollary2 => "forall open A, open B : int(cl(A)) & int(cl(B)) = int(cl(A & B))",
            Statement::Hint => "forall set A, open B : A & int(cl(B)) <= cl(A & B)",
            Statement::HintOpen => "forall open A, open B : A & int(cl(B)) <= cl(A & B)",
            Statement::EPrinted => "forall set K, open A with K & A = empty : int(cl(K)) & cl(A) = int(cl(K & A))",
        }
    }

    pub fn is_condition(self) -> bool {
        Self::CONDITIONS.contains(&self)
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Statement {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Statement::ALL
            .into_iter()
            .find(|st| st.id() == s)
            .ok_or_else(|| format!("unknown statement `{s}`"))
    }
}

/// Outcome of checking one universally quantified statement on one space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    /// `None` for user-supplied claims.
    pub statement: Option<Statement>,
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn pass(statement: Option<Statement>) -> Self {
        Verdict { statement, holds: true, witness: None }
    }

    pub(crate) fn from_outcome(statement: Option<Statement>, witness: Option<Witness>) -> Self {
        match witness {
            None => Verdict::pass(statement),
            Some(w) => Verdict { statement, holds: false, witness: Some(w) },
        }
    }
}

/// Domain a quantified variable ranges over.
#[derive(Clone, Copy)]
enum Domain {
    Subsets,
    Opens,
    Closed,
}

impl Domain {
    fn values(self, t: &Topology) -> Vec<u32> {
        let full = t.full_bits();
        match self {
            Domain::Subsets => (0..=full).collect(),
            Domain::Opens => t.open_masks().to_vec(),
            Domain::Closed => t.open_masks().iter().map(|&m| !m & full).collect(),
        }
    }
}

/// Two-variable search: `side` filters assignments, `body` returns
/// `(lhs, rhs)` for the relation `op`.
fn search2(
    t: &Topology,
    names: [&str; 2],
    domains: [Domain; 2],
    side: impl Fn(u32, u32) -> bool,
    op: RelOp,
    body: impl Fn(u32, u32) -> (u32, u32),
) -> Option<Witness> {
    let outer = domains[0].values(t);
    let inner = domains[1].values(t);
    for &x in &outer {
        for &y in &inner {
            if !side(x, y) {
                continue;
            }
            let (lhs, rhs) = body(x, y);
            if !op.holds(lhs, rhs) {
                let n = t.points();
                let set = |m| PointSet::from_bits_unchecked(n, m);
                return Some(Witness {
                    assignment: vec![(names[0].to_owned(), set(x)), (names[1].to_owned(), set(y))],
                    lhs: set(lhs),
                    op,
                    rhs: set(rhs),
                });
            }
        }
    }
    None
}

fn always(_: u32, _: u32) -> bool {
    true
}

fn disjoint(x: u32, y: u32) -> bool {
    x & y == 0
}

/// Checks one statement exhaustively on `t`.
pub fn check(t: &Topology, statement: Statement) -> Verdict {
    use Domain::*;
    use RelOp::*;
    let cl = |s| t.closure_bits(s);
    let int = |s| t.interior_bits(s);
    let reg = |s| int(cl(s));
    let witness = match statement {
        Statement::A => {
            let n = t.points();
            t.open_masks().iter().find(|&&a| !t.is_open_bits(cl(a))).map(|&a| {
                let set = |m| PointSet::from_bits_unchecked(n, m);
                Witness {
                    assignment: vec![("A".to_owned(), set(a))],
                    lhs: set(cl(a)),
                    op: Equals,
                    rhs: set(int(cl(a))),
                }
            })
        }
        Statement::B => {
            search2(t, ["A", "B"], [Opens, Opens], always, Equals, |a, b| (cl(a) & cl(b), cl(a & b)))
        }
        Statement::C => search2(t, ["A", "B"], [Opens, Opens], disjoint, Equals, |a, b| (cl(a) & cl(b), 0)),
        Statement::D => {
            search2(t, ["K", "A"], [Subsets, Opens], disjoint, Equals, |k, a| (cl(reg(k)) & cl(a), 0))
        }
        Statement::E => {
            search2(t, ["K", "A"], [Subsets, Opens], always, Equals, |k, a| (reg(k) & cl(a), reg(k & a)))
        }
        Statement::EPrinted => {
            search2(t, ["K", "A"], [Subsets, Opens], disjoint, Equals, |k, a| (reg(k) & cl(a), reg(k & a)))
        }
        Statement::F => {
            search2(t, ["A", "B"], [Opens, Opens], always, Equals, |a, b| (reg(a) | reg(b), reg(a | b)))
        }
        Statement::G => {
            search2(t, ["G", "H"], [Closed, Closed], always, Equals, |g, h| (int(g) | int(h), int(g | h)))
        }
        Statement::Lemma1 => {
            search2(t, ["A", "B"], [Subsets, Opens], always, Equals, |a, b| (reg(a) & reg(b), reg(a & b)))
        }
        Statement::Corollary2 => {
            search2(t, ["A", "B"], [Opens, Opens], always, Equals, |a, b| (reg(a) & reg(b), reg(a & b)))
        }
        Statement::Hint => {
            search2(t, ["A", "B"], [Subsets, Opens], always, SubsetOf, |a, b| (a & reg(b), cl(a & b)))
        }
        Statement::HintOpen => {
            search2(t, ["A", "B"], [Opens, Opens], always, SubsetOf, |a, b| (a & reg(b), cl(a & b)))
        }
    };
    Verdict::from_outcome(Some(statement), witness)
}

/// Condition (a) only: the closure of every open set is open.
pub fn is_extremally_disconnected(t: &Topology) -> bool {
    t.open_masks().iter().all(|&a| t.is_open_bits(t.closure_bits(a)))
}

/// The reduced form of [`Statement::EPrinted`]: with `K ∩ A = ∅` the
/// right-hand side is `int(cl ∅) = ∅`, leaving `int(cl K) ∩ cl A = ∅`.
pub fn check_e_printed_reduced(t: &Topology) -> Verdict {
    let reg = |s| t.interior_bits(t.closure_bits(s));
    let w = search2(t, ["K", "A"], [Domain::Subsets, Domain::Opens], disjoint, RelOp::Equals, |k, a| {
        (reg(k) & t.closure_bits(a), 0)
    });
    Verdict::from_outcome(Some(Statement::EPrinted), w)
}

/// Verdicts for the seven conditions, in order (a)..(g).
pub fn condition_vector(t: &Topology) -> [bool; 7] {
    Statement::CONDITIONS.map(|c| check(t, c).holds)
}
