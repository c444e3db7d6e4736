//! Recursive-descent parser for claims.
//!
//! ```text
//! claim    = "forall" binding {"," binding} ["with" relation {"," relation}] ":" relation ;
//! binding  = ("open" | "closed" | "set") ident ;
//! relation = expr ("=" | "<=") expr ;
//! expr     = inter {"|" inter} ;
//! inter    = unary {"&" unary} ;
//! unary    = ("cl" | "int" | "cmp") "(" expr ")" | atom ;
//! atom     = ident | "empty" | "X" | "(" expr ")" ;
//! ```

use std::collections::HashMap;

use super::ast::{Binding, Claim, Expr, Relation, Sort};
use super::lexer::{tokenize, Pos, Tok};
use super::ClaimError;
use crate::characterizations::RelOp;

type ClaimParts = (Vec<(Binding, Pos)>, Vec<Relation>, Relation);

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    /// Positions of variable uses, for unbound-variable errors.
    uses: Vec<(String, Pos)>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let tok = self.toks[self.at].0.clone();
        if tok != Tok::Eof {
            self.at += 1;
        }
        tok
    }

    fn error(&self, expected: &[&str]) -> ClaimError {
        let pos = self.pos();
        ClaimError::Parse {
            line: pos.line,
            column: pos.column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().to_string(),
        }
    }

    fn expect(&mut self, tok: Tok, name: &str) -> Result<(), ClaimError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn claim(&mut self) -> Result<ClaimParts, ClaimError> {
        self.expect(Tok::Forall, "`forall`")?;
        let mut bindings = vec![self.binding()?];
        while *self.peek() == Tok::Comma {
            self.bump();
            bindings.push(self.binding()?);
        }
        let mut sides = Vec::new();
        match self.peek() {
            Tok::With => {
                self.bump();
                sides.push(self.relation()?);
                while *self.peek() == Tok::Comma {
                    self.bump();
                    sides.push(self.relation()?);
                }
                self.expect(Tok::Colon, "`:`").map_err(|_| self.error(&["`,`", "`:`", "`&`", "`|`"]))?;
            }
            Tok::Colon => {
                self.bump();
            }
            _ => return Err(self.error(&["`,`", "`with`", "`:`"])),
        }
        let body = self.relation()?;
        if *self.peek() != Tok::Eof {
            return Err(self.error(&["`&`", "`|`", "end of input"]));
        }
        Ok((bindings, sides, body))
    }

    fn binding(&mut self) -> Result<(Binding, Pos), ClaimError> {
        let sort = match self.peek() {
            Tok::Open => Sort::Open,
            Tok::Closed => Sort::Closed,
            Tok::Set => Sort::Set,
            _ => return Err(self.error(&["`open`", "`closed`", "`set`"])),
        };
        self.bump();
        let pos = self.pos();
        match self.bump() {
            Tok::Ident(name) => Ok((Binding { sort, name }, pos)),
            _ => {
                self.at -= 1;
                Err(self.error(&["identifier"]))
            }
        }
    }

    fn relation(&mut self) -> Result<Relation, ClaimError> {
        let lhs = self.expr()?;
        let op = match self.peek() {
            Tok::Eq => RelOp::Equals,
            Tok::Le => RelOp::SubsetOf,
            _ => return Err(self.error(&["`&`", "`|`", "`=`", "`<=`"])),
        };
        self.bump();
        let rhs = self.expr()?;
        Ok(Relation { lhs, op, rhs })
    }

    fn expr(&mut self) -> Result<Expr, ClaimError> {
        let mut e = self.inter()?;
        while *self.peek() == Tok::Pipe {
            self.bump();
            e = Expr::Union(Box::new(e), Box::new(self.inter()?));
        }
        Ok(e)
    }

    fn inter(&mut self) -> Result<Expr, ClaimError> {
        let mut e = self.unary()?;
        while *self.peek() == Tok::Amp {
            self.bump();
            e = Expr::Intersection(Box::new(e), Box::new(self.unary()?));
        }
        Ok(e)
    }

    fn unary(&mut self) -> Result<Expr, ClaimError> {
        let wrap: fn(Box<Expr>) -> Expr = match self.peek() {
            Tok::Cl => Expr::Closure,
            Tok::Int => Expr::Interior,
            Tok::Cmp => Expr::Complement,
            _ => return self.atom(),
        };
        self.bump();
        self.expect(Tok::LParen, "`(`")?;
        let inner = self.expr()?;
        self.expect(Tok::RParen, "`)`").map_err(|_| self.error(&["`&`", "`|`", "`)`"]))?;
        Ok(wrap(Box::new(inner)))
    }

    fn atom(&mut self) -> Result<Expr, ClaimError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                self.uses.push((name.clone(), pos));
                Ok(Expr::Var(name))
            }
            Tok::Empty => {
                self.bump();
                Ok(Expr::Empty)
            }
            Tok::Full => {
                self.bump();
                Ok(Expr::Full)
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`").map_err(|_| self.error(&["`&`", "`|`", "`)`"]))?;
                Ok(e)
            }
            _ => Err(self.error(&["identifier", "`empty`", "`X`", "`(`", "`cl`", "`int`", "`cmp`"])),
        }
    }
}

pub fn parse_claim(text: &str) -> Result<Claim, ClaimError> {
    let mut p = Parser { toks: tokenize(text)?, at: 0, uses: Vec::new() };
    let (bindings, side_conditions, body) = p.claim()?;

    let mut bound: HashMap<&str, ()> = HashMap::new();
    for (b, pos) in &bindings {
        if bound.insert(b.name.as_str(), ()).is_some() {
            return Err(ClaimError::DuplicateBinding { name: b.name.clone(), line: pos.line, column: pos.column });
        }
    }
    if let Some((name, pos)) = p.uses.iter().find(|(name, _)| !bound.contains_key(name.as_str())) {
        return Err(ClaimError::UnboundVariable { name: name.clone(), line: pos.line, column: pos.column });
    }

    Ok(Claim { bindings: bindings.into_iter().map(|(b, _)| b).collect(), side_conditions, body })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(n: &str) -> Box<Expr> {
        Box::new(Expr::Var(n.to_owned()))
    }

    #[test]
    fn condition_b() {
        let c = parse_claim("forall open A, open B : cl(A) & cl(B) = cl(A & B)").unwrap();
        assert_eq!(c.bindings.len(), 2);
        assert!(c.bindings.iter().all(|b| b.sort == Sort::Open));
        assert!(c.side_conditions.is_empty());
        assert_eq!(c.body.op, RelOp::Equals);
        assert_eq!(
            c.body.lhs,
            Expr::Intersection(Box::new(Expr::Closure(var("A"))), Box::new(Expr::Closure(var("B"))))
        );
        assert_eq!(c.body.rhs, Expr::Closure(Box::new(Expr::Intersection(var("A"), var("B")))));
    }

    #[test]
    fn condition_d_with_side_condition() {
        let c = parse_claim("forall set K, open A with K & A = empty : cl(int(cl(K))) & cl(A) = empty").unwrap();
        assert_eq!(c.bindings[0], Binding { sort: Sort::Set, name: "K".into() });
        assert_eq!(c.side_conditions.len(), 1);
        assert_eq!(c.side_conditions[0].rhs, Expr::Empty);
        assert_eq!(c.body.rhs, Expr::Empty);
    }

    #[test]
    fn intersection_binds_tighter() {
        let c = parse_claim("forall set A, set B, set C : A | B & C = X").unwrap();
        assert_eq!(c.body.lhs, Expr::Union(var("A"), Box::new(Expr::Intersection(var("B"), var("C")))));
        let c = parse_claim("forall set A, set B, set C : A | B | C <= X").unwrap();
        assert_eq!(c.body.lhs, Expr::Union(Box::new(Expr::Union(var("A"), var("B"))), var("C")));
        assert_eq!(c.body.op, RelOp::SubsetOf);
    }

    #[test]
    fn unbound_variable() {
        let err = parse_claim("forall open A : cl(B) = B").unwrap_err();
        assert_eq!(err, ClaimError::UnboundVariable { name: "B".into(), line: 1, column: 20 });
    }

    #[test]
    fn duplicate_binding() {
        let err = parse_claim("forall open A, set A : A = A").unwrap_err();
        assert!(matches!(err, ClaimError::DuplicateBinding { ref name, line: 1, column: 20 } if name == "A"));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_claim("forall open A :\n  cl(A = A").unwrap_err();
        let ClaimError::Parse { line, column, expected, found } = err else { panic!() };
        assert_eq!((line, column), (2, 8));
        assert!(expected.contains(&"`)`".to_owned()));
        assert_eq!(found, "`=`");

        assert!(matches!(parse_claim("open A : A = A"), Err(ClaimError::Parse { column: 1, .. })));
        assert!(matches!(parse_claim("forall open X : X = X"), Err(ClaimError::Parse { column: 13, .. })));
        assert!(matches!(parse_claim("forall open A : A = A A"), Err(ClaimError::Parse { column: 23, .. })));
        assert!(matches!(parse_claim("forall open A : A - A = A"), Err(ClaimError::Parse { column: 19, .. })));
        assert!(matches!(parse_claim("forall : A = A"), Err(ClaimError::Parse { .. })));
        assert!(matches!(parse_claim(""), Err(ClaimError::Parse { .. })));
    }

    #[test]
    fn keywords_are_reserved_but_prefixes_are_not() {
        let c = parse_claim("forall open cl1, set interior : cl(cl1) <= interior | cl1").unwrap();
        assert_eq!(c.bindings[0].name, "cl1");
        assert!(parse_claim("forall open int : int = int").is_err());
    }

    #[test]
    fn whitespace_insensitive() {
        let a = parse_claim("forall open A,open B:cl(A)&cl(B)=cl(A&B)").unwrap();
        let b = parse_claim("  forall\topen A ,\n open B :  cl( A ) & cl( B ) = cl( A & B ) ").unwrap();
        assert_eq!(a, b);
    }
}
