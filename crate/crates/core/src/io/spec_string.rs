//! Graph expressions accepted on the command line.
//!
//! ```text
//! expr  := unary (('~' | '+') unary)*        left-associative
//! unary := '!' unary | atom
//! atom  := '(' expr ')' | 'mc(' int ',' expr ')' | name | graph6
//! name  := 'petersen' | 'K' int | 'K' int ',' int | 'C' int | 'P' int | 'E' int
//! ```
//!
//! `~` is the join, `+` the disjoint union and `!` the complement. A graph6
//! literal is self-delimiting (its first byte fixes its length), so one may
//! be followed directly by an operator even though `~` is also a graph6
//! byte. Names win over graph6; the prefix `g6:` forces a literal.

use thiserror::Error;

use crate::graph::{build_named, Graph, GraphError, NamedGraph};
use crate::io::graph6::{self, Graph6Error};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecError {
    #[error("unexpected end of graph expression")]
    UnexpectedEnd,
    #[error("unexpected '{found}' at offset {offset}")]
    Unexpected { offset: usize, found: char },
    #[error("bad number at offset {0}")]
    BadNumber(usize),
    #[error("graph6 literal at offset {offset}: {source}")]
    Graph6 { offset: usize, source: Graph6Error },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub type Result<T> = std::result::Result<T, SpecError>;

pub fn parse_graph_spec(s: &str) -> Result<Graph> {
    let mut p = Parser {
        src: s.trim().as_bytes(),
        pos: 0,
    };
    let g = p.expr()?;
    p.skip_ws();
    match p.peek() {
        None => Ok(g),
        Some(c) => Err(p.unexpected(c)),
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn unexpected(&self, c: u8) -> SpecError {
        SpecError::Unexpected {
            offset: self.pos,
            found: c as char,
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, want: u8) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.unexpected(c)),
            None => Err(SpecError::UnexpectedEnd),
        }
    }

    fn rest_starts_with(&self, s: &str) -> bool {
        self.src[self.pos..].starts_with(s.as_bytes())
    }

    fn expr(&mut self) -> Result<Graph> {
        let mut g = self.unary()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'~') => {
                    self.pos += 1;
                    let h = self.unary()?;
                    g = g.join(&h)?;
                }
                Some(b'+') => {
                    self.pos += 1;
                    let h = self.unary()?;
                    g = g.disjoint_union(&h)?;
                }
                _ => return Ok(g),
            }
        }
    }

    fn unary(&mut self) -> Result<Graph> {
        self.skip_ws();
        if self.peek() == Some(b'!') {
            self.pos += 1;
            return Ok(self.unary()?.complement());
        }
        self.atom()
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or(SpecError::BadNumber(start))
    }

    fn atom(&mut self) -> Result<Graph> {
        self.skip_ws();
        let Some(c) = self.peek() else {
            return Err(SpecError::UnexpectedEnd);
        };
        if c == b'(' {
            self.pos += 1;
            let g = self.expr()?;
            self.expect(b')')?;
            return Ok(g);
        }
        if self.rest_starts_with("mc(") {
            self.pos += 3;
            let w = self.number()?;
            self.expect(b',')?;
            let base = self.expr()?;
            self.expect(b')')?;
            return Ok(Graph::multicone(w, &base)?);
        }
        if self.rest_starts_with("petersen") {
            self.pos += "petersen".len();
            return Ok(build_named(&NamedGraph::Petersen)?);
        }
        if self.rest_starts_with("g6:") {
            self.pos += 3;
            return self.graph6();
        }
        let digit_next = self.src.get(self.pos + 1).is_some_and(u8::is_ascii_digit);
        if digit_next && matches!(c, b'K' | b'C' | b'P' | b'E') {
            self.pos += 1;
            let a = self.number()?;
            let named = match c {
                b'K' if self.peek() == Some(b',') => {
                    self.pos += 1;
                    NamedGraph::CompleteBipartite(a, self.number()?)
                }
                b'K' => NamedGraph::Complete(a),
                b'C' => NamedGraph::Cycle(a),
                b'P' => NamedGraph::Path(a),
                _ => NamedGraph::Empty(a),
            };
            return Ok(build_named(&named)?);
        }
        self.graph6()
    }

    /// A graph6 literal whose length is read from its order prefix.
    fn graph6(&mut self) -> Result<Graph> {
        let start = self.pos;
        let rest = &self.src[start..];
        let Some(&first) = rest.first() else {
            return Err(SpecError::UnexpectedEnd);
        };
        if !(63..=126).contains(&first) {
            return Err(self.unexpected(first));
        }
        let (n, header) = if first != 126 {
            ((first - 63) as usize, 1)
        } else {
            let n = rest
                .get(1..4)
                .filter(|b| b.iter().all(|x| (63..=126).contains(x)))
                .map(|b| b.iter().fold(0usize, |acc, &x| acc << 6 | (x - 63) as usize))
                .unwrap_or(usize::MAX);
            (n, 4)
        };
        let len = if n == usize::MAX {
            rest.len()
        } else {
            (header + (n * n.saturating_sub(1) / 2).div_ceil(6)).min(rest.len())
        };
        let text = std::str::from_utf8(&rest[..len]).map_err(|_| self.unexpected(first))?;
        let g = graph6::parse(text).map_err(|source| SpecError::Graph6 {
            offset: start,
            source,
        })?;
        self.pos += len;
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;

    fn petersen() -> Graph {
        build_named(&NamedGraph::Petersen).unwrap()
    }

    #[test]
    fn names() {
        assert_eq!(parse_graph_spec("K5").unwrap(), Graph::complete(5).unwrap());
        assert_eq!(
            parse_graph_spec("K1,4").unwrap(),
            build_named(&NamedGraph::CompleteBipartite(1, 4)).unwrap()
        );
        assert_eq!(parse_graph_spec("C7").unwrap().edge_count(), 7);
        assert_eq!(parse_graph_spec("petersen").unwrap(), petersen());
    }

    #[test]
    fn join_matches_multicone() {
        let a = parse_graph_spec("K1~petersen").unwrap();
        let b = parse_graph_spec("mc(1,petersen)").unwrap();
        assert!(is_isomorphic(&a, &b));
        assert_eq!(b, Graph::multicone(1, &petersen()).unwrap());
    }

    #[test]
    fn complement_binds_tightest_and_left_associative() {
        // !K2+K1 is (2K1) + K1, not the complement of K3
        let g = parse_graph_spec("!K2+K1").unwrap();
        assert_eq!((g.order(), g.edge_count()), (3, 0));
        // K1~K1+K1 is (K1~K1)+K1 = K2 + K1
        let g = parse_graph_spec("K1~K1+K1").unwrap();
        assert_eq!((g.order(), g.edge_count()), (3, 1));
        let g = parse_graph_spec("K1~(K1+K1)").unwrap();
        assert_eq!((g.order(), g.edge_count()), (3, 2));
    }

    #[test]
    fn graph6_literals_delimit_themselves() {
        assert_eq!(parse_graph_spec("C~").unwrap(), Graph::complete(4).unwrap());
        // K4 joined with K1 is K5
        assert_eq!(parse_graph_spec("C~~K1").unwrap(), Graph::complete(5).unwrap());
        assert_eq!(parse_graph_spec("g6:A_").unwrap(), Graph::complete(2).unwrap());
        let g = parse_graph_spec("C4+K1").unwrap();
        assert_eq!((g.order(), g.edge_count()), (5, 4));
    }

    #[test]
    fn errors() {
        assert!(parse_graph_spec("").is_err());
        assert!(parse_graph_spec("K5~").is_err());
        assert!(parse_graph_spec("(K5").is_err());
        assert!(parse_graph_spec("C2").is_err());
        assert!(parse_graph_spec("K3 K3").is_err());
    }
}
