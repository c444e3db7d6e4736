//! A small language for universally quantified closure/interior identities.
//!
//! ```text
//! forall set K, open A with K & A = empty : cl(int(cl(K))) & cl(A) = empty
//! ```
//!
//! `cl`, `int` and `cmp` are closure, interior and complement; `&` binds
//! tighter than `|`; `empty` and `X` are the empty set and the whole space;
//! `=` is equality and `<=` inclusion. `open` and `closed` variables range
//! over the open and closed sets, `set` variables over every subset.

mod ast;
mod eval;
mod lexer;
mod parser;

pub use ast::{Binding, Claim, Expr, Relation, Sort};
pub use eval::{eval_claim, CompiledClaim};
pub use parser::parse_claim;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClaimError {
    #[error("{line}:{column}: expected {}, found {found}", .expected.join(" or "))]
    Parse { line: usize, column: usize, expected: Vec<String>, found: String },
    #[error("{line}:{column}: variable `{name}` is not bound")]
    UnboundVariable { name: String, line: usize, column: usize },
    #[error("{line}:{column}: variable `{name}` is bound twice")]
    DuplicateBinding { name: String, line: usize, column: usize },
}
