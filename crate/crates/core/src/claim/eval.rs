//! Claim evaluation over one topology.
//!
//! Variables are resolved to slots once; each side condition is tested as
//! soon as its last variable is bound. Assignments are visited in the same
//! order as a plain nested loop, so the first failure is the same.

use super::ast::{Claim, Expr, Relation, Sort};
use crate::characterizations::{RelOp, Verdict, Witness};
use crate::point_set::PointSet;
use crate::topology::Topology;

#[derive(Debug)]
enum Node {
    Var(usize),
    Empty,
    Full,
    Complement(Box<Node>),
    Closure(Box<Node>),
    Interior(Box<Node>),
    Union(Box<Node>, Box<Node>),
    Intersection(Box<Node>, Box<Node>),
}

impl Node {
    fn compile(e: &Expr, names: &[&str]) -> Node {
        let b = |e: &Expr| Box::new(Node::compile(e, names));
        match e {
            Expr::Var(name) => {
                Node::Var(names.iter().position(|n| n == name).expect("parser guarantees variables are bound"))
            }
            Expr::Empty => Node::Empty,
            Expr::Full => Node::Full,
            Expr::Complement(x) => Node::Complement(b(x)),
            Expr::Closure(x) => Node::Closure(b(x)),
            Expr::Interior(x) => Node::Interior(b(x)),
            Expr::Union(l, r) => Node::Union(b(l), b(r)),
            Expr::Intersection(l, r) => Node::Intersection(b(l), b(r)),
        }
    }

    fn eval(&self, t: &Topology, env: &[u32]) -> u32 {
        match self {
            Node::Var(slot) => env[*slot],
            Node::Empty => 0,
            Node::Full => t.full_bits(),
            Node::Complement(x) => !x.eval(t, env) & t.full_bits(),
            Node::Closure(x) => t.closure_bits(x.eval(t, env)),
            Node::Interior(x) => t.interior_bits(x.eval(t, env)),
            Node::Union(l, r) => l.eval(t, env) | r.eval(t, env),
            Node::Intersection(l, r) => l.eval(t, env) & r.eval(t, env),
        }
    }

    fn max_slot(&self) -> Option<usize> {
        match self {
            Node::Var(s) => Some(*s),
            Node::Empty | Node::Full => None,
            Node::Complement(x) | Node::Closure(x) | Node::Interior(x) => x.max_slot(),
            Node::Union(l, r) | Node::Intersection(l, r) => l.max_slot().max(r.max_slot()),
        }
    }
}

#[derive(Debug)]
struct CompiledRelation {
    lhs: Node,
    op: RelOp,
    rhs: Node,
}

impl CompiledRelation {
    fn new(r: &Relation, names: &[&str]) -> Self {
        CompiledRelation { lhs: Node::compile(&r.lhs, names), op: r.op, rhs: Node::compile(&r.rhs, names) }
    }

    fn sides(&self, t: &Topology, env: &[u32]) -> (u32, u32) {
        (self.lhs.eval(t, env), self.rhs.eval(t, env))
    }

    fn holds(&self, t: &Topology, env: &[u32]) -> bool {
        let (l, r) = self.sides(t, env);
        self.op.holds(l, r)
    }
}

/// A claim resolved to slot form, reusable across topologies.
#[derive(Debug)]
pub struct CompiledClaim {
    names: Vec<String>,
    sorts: Vec<Sort>,
    /// Side conditions checked right after slot `i` is bound live in
    /// `sides_at[i + 1]`; `sides_at[0]` holds variable-free ones.
    sides_at: Vec<Vec<CompiledRelation>>,
    body: CompiledRelation,
}

impl CompiledClaim {
    pub fn new(claim: &Claim) -> Self {
        let names: Vec<&str> = claim.bindings.iter().map(|b| b.name.as_str()).collect();
        let mut sides_at: Vec<Vec<CompiledRelation>> = (0..=names.len()).map(|_| Vec::new()).collect();
        for side in &claim.side_conditions {
            let r = CompiledRelation::new(side, &names);
            let level = r.lhs.max_slot().max(r.rhs.max_slot()).map_or(0, |s| s + 1);
            sides_at[level].push(r);
        }
        CompiledClaim {
            names: names.iter().map(|s| s.to_string()).collect(),
            sorts: claim.bindings.iter().map(|b| b.sort).collect(),
            sides_at,
            body: CompiledRelation::new(&claim.body, &names),
        }
    }

    fn domain(&self, t: &Topology, slot: usize) -> Vec<u32> {
        let full = t.full_bits();
        match self.sorts[slot] {
            Sort::Set => (0..=full).collect(),
            Sort::Open => t.open_masks().to_vec(),
            Sort::Closed => t.open_masks().iter().map(|&m| !m & full).collect(),
        }
    }

    /// First failing assignment, if any.
    pub fn find_failure(&self, t: &Topology) -> Option<Witness> {
        let domains: Vec<Vec<u32>> = (0..self.sorts.len()).map(|s| self.domain(t, s)).collect();
        let mut env = vec![0u32; self.sorts.len()];
        if !self.sides_at[0].iter().all(|r| r.holds(t, &env)) {
            return None;
        }
        self.search(t, &domains, &mut env, 0)
    }

    fn search(&self, t: &Topology, domains: &[Vec<u32>], env: &mut [u32], slot: usize) -> Option<Witness> {
        if slot == env.len() {
            let (lhs, rhs) = self.body.sides(t, env);
            if self.body.op.holds(lhs, rhs) {
                return None;
            }
            let n = t.points();
            let set = |m| PointSet::from_bits_unchecked(n, m);
            return Some(Witness {
                assignment: self.names.iter().cloned().zip(env.iter().map(|&m| set(m))).collect(),
                lhs: set(lhs),
                op: self.body.op,
                rhs: set(rhs),
            });
        }
        for &value in &domains[slot] {
            env[slot] = value;
            if !self.sides_at[slot + 1].iter().all(|r| r.holds(t, env)) {
                continue;
            }
            if let Some(w) = self.search(t, domains, env, slot + 1) {
                return Some(w);
            }
        }
        None
    }

    pub fn eval(&self, t: &Topology) -> Verdict {
        Verdict::from_outcome(None, self.find_failure(t))
    }

    /// Re-evaluates the claim at `witness`'s assignment: true when every
    /// binding is in its domain, every side condition holds, and the body
    /// fails with the recorded sides.
    pub fn reproduces(&self, t: &Topology, witness: &Witness) -> bool {
        let mut env = Vec::with_capacity(self.names.len());
        for (slot, name) in self.names.iter().enumerate() {
            let Some(set) = witness.get(name) else { return false };
            if set.universe_size() != t.points() {
                return false;
            }
            let in_domain = match self.sorts[slot] {
                Sort::Set => true,
                Sort::Open => t.is_open_bits(set.bits()),
                Sort::Closed => t.is_open_bits(!set.bits() & t.full_bits()),
            };
            if !in_domain {
                return false;
            }
            env.push(set.bits());
        }
        let sides_ok = self.sides_at.iter().flatten().all(|r| r.holds(t, &env));
        let (lhs, rhs) = self.body.sides(t, &env);
        sides_ok && !self.body.op.holds(lhs, rhs) && lhs == witness.lhs.bits() && rhs == witness.rhs.bits()
    }
}

/// Evaluates `claim` exhaustively on `t`.
pub fn eval_claim(t: &Topology, claim: &Claim) -> Verdict {
    CompiledClaim::new(claim).eval(t)
}
