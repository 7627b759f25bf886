//! Session files: one ring declaration followed by named polynomials and
//! ideals.
//!
//! ```text
//! # comment
//! ring p=2 vars=x,y,u,v order=grevlex
//! poly f = x*v*(y-u)
//! ideal I = x*v*(y-u), y*u*(x-v)
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use crate::error::{Error, Result};
use crate::field::Prime;
use crate::groebner::Ideal;
use crate::poly::{parse_poly, parse_poly_list, MonomialOrder, Polynomial, Ring, RingCtx};

#[derive(Clone, Debug)]
pub struct Session {
    pub ring: Ring,
    pub polys: BTreeMap<String, Polynomial>,
    pub ideals: BTreeMap<String, Ideal>,
}

impl Session {
    pub fn poly(&self, name: &str) -> Result<&Polynomial> {
        self.polys
            .get(name)
            .ok_or_else(|| Error::InvalidArgument(format!("no polynomial named '{name}'")))
    }

    pub fn ideal(&self, name: &str) -> Result<&Ideal> {
        self.ideals
            .get(name)
            .ok_or_else(|| Error::InvalidArgument(format!("no ideal named '{name}'")))
    }

    /// A named ideal, or the principal ideal of a named polynomial.
    pub fn ideal_like(&self, name: &str) -> Result<Ideal> {
        if let Some(i) = self.ideals.get(name) {
            return Ok(i.clone());
        }
        if let Some(f) = self.polys.get(name) {
            return Ok(Ideal::principal(f));
        }
        Err(Error::InvalidArgument(format!(
            "no ideal or polynomial named '{name}'"
        )))
    }

    /// A named polynomial, or the single generator of a principal ideal.
    pub fn poly_like(&self, name: &str) -> Result<Polynomial> {
        if let Some(f) = self.polys.get(name) {
            return Ok(f.clone());
        }
        match self.ideals.get(name) {
            Some(i) if i.gens().len() == 1 => Ok(i.gens()[0].clone()),
            Some(_) => Err(Error::InvalidArgument(format!(
                "'{name}' is an ideal with more than one generator"
            ))),
            None => Err(Error::InvalidArgument(format!(
                "no polynomial named '{name}'"
            ))),
        }
    }
}

pub fn load_session(path: &Path) -> Result<Session> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_session(&text, &path.display().to_string())
}

fn at(origin: &str, line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Session {
        path: origin.to_string(),
        line,
        column,
        message: message.into(),
    }
}

fn valid_name(name: &str) -> bool {
    let mut c = name.chars();
    matches!(c.next(), Some(ch) if ch.is_ascii_alphabetic())
        && c.all(|ch| ch.is_ascii_alphanumeric() || ch == '_')
}

fn parse_ring(rest: &str, origin: &str, line: usize, offset: usize) -> Result<Ring> {
    let mut p = None;
    let mut vars = None;
    let mut order = MonomialOrder::Grevlex;
    for field in rest.split_whitespace() {
        let col = offset + rest.find(field).unwrap_or(0) + 1;
        let (key, value) = field.split_once('=').ok_or_else(|| {
            at(
                origin,
                line,
                col,
                format!("expected key=value, found '{field}'"),
            )
        })?;
        match key {
            "p" => {
                let v: u64 = value
                    .parse()
                    .map_err(|_| at(origin, line, col, format!("invalid prime '{value}'")))?;
                p = Some(Prime::new(v).map_err(|e| at(origin, line, col, e.to_string()))?);
            }
            "vars" => vars = Some(value.split(',').map(str::to_string).collect::<Vec<_>>()),
            "order" => {
                order = value
                    .parse()
                    .map_err(|e: Error| at(origin, line, col, e.to_string()))?
            }
            other => {
                return Err(at(
                    origin,
                    line,
                    col,
                    format!("unknown ring field '{other}'"),
                ))
            }
        }
    }
    let p = p.ok_or_else(|| at(origin, line, 1, "ring declaration needs p=<prime>"))?;
    let vars =
        vars.ok_or_else(|| at(origin, line, 1, "ring declaration needs vars=<v1>,<v2>,..."))?;
    RingCtx::new(p, &vars, order).map_err(|e| at(origin, line, 1, e.to_string()))
}

/// Parses session text; `origin` names the source in error messages.
pub fn parse_session(text: &str, origin: &str) -> Result<Session> {
    let mut ring: Option<Ring> = None;
    let mut polys = BTreeMap::new();
    let mut ideals = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = content.len() - trimmed.len();
        let (keyword, rest) = trimmed
            .split_once(char::is_whitespace)
            .unwrap_or((trimmed.trim_end(), ""));
        let rest_offset = indent + keyword.len() + 1;
        match keyword {
            "ring" => {
                if ring.is_some() {
                    return Err(at(origin, line, indent + 1, "duplicate ring declaration"));
                }
                ring = Some(parse_ring(rest, origin, line, rest_offset)?);
            }
            "poly" | "ideal" => {
                let r = ring.as_ref().ok_or_else(|| {
                    at(origin, line, indent + 1, "ring declaration must come first")
                })?;
                let (name, expr) = rest.split_once('=').ok_or_else(|| {
                    at(origin, line, rest_offset + 1, "expected '<name> = <expr>'")
                })?;
                let name = name.trim();
                if !valid_name(name) {
                    return Err(at(
                        origin,
                        line,
                        rest_offset + 1,
                        format!("invalid name '{name}'"),
                    ));
                }
                if polys.contains_key(name) || ideals.contains_key(name) {
                    return Err(at(
                        origin,
                        line,
                        rest_offset + 1,
                        format!("duplicate name '{name}'"),
                    ));
                }
                let expr_col = rest_offset + rest.find('=').unwrap() + 1;
                let locate = |e: Error| match e {
                    Error::Syntax { column, message } => {
                        at(origin, line, expr_col + column, message)
                    }
                    other => at(origin, line, expr_col + 1, other.to_string()),
                };
                if keyword == "poly" {
                    polys.insert(name.to_string(), parse_poly(expr, r).map_err(locate)?);
                } else {
                    let gens = parse_poly_list(expr, r).map_err(locate)?;
                    ideals.insert(name.to_string(), Ideal::new(r, gens).map_err(locate)?);
                }
            }
            other => {
                return Err(at(
                    origin,
                    line,
                    indent + 1,
                    format!("unknown declaration '{other}'"),
                ))
            }
        }
    }
    let ring = ring.ok_or_else(|| at(origin, 1, 1, "missing ring declaration"))?;
    Ok(Session {
        ring,
        polys,
        ideals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_session() {
        let s = parse_session(
            "# demo\nring p=3 vars=x,y order=lex\npoly f = x^2 - y  # trailing\nideal I = f0, x\n",
            "t",
        );
        assert!(s.is_err());
        let s = parse_session(
            "ring p=3 vars=x,y order=lex\npoly f = x^2 - y\nideal I = x^2 - y, x\n",
            "t",
        )
        .unwrap();
        assert_eq!(s.ring.order(), MonomialOrder::Lex);
        assert_eq!(s.poly("f").unwrap().to_string(), "x^2 + 2*y");
        assert_eq!(s.ideal("I").unwrap().gens().len(), 2);
        assert_eq!(
            s.poly_like("f").unwrap(),
            s.ideal_like("f").unwrap().gens()[0]
        );
    }

    #[test]
    fn session_errors() {
        let e = parse_session("", "empty.fpl").unwrap_err();
        assert!(e.to_string().contains("missing ring declaration"), "{e}");
        let e = parse_session("poly f = x\nring p=2 vars=x\n", "s").unwrap_err();
        assert!(e.to_string().contains("must come first"), "{e}");
        let e = parse_session("ring p=2 vars=x\npoly f = x\nideal f = x\n", "s").unwrap_err();
        assert!(e.to_string().contains("duplicate name"), "{e}");
        let e = parse_session("ring p=4 vars=x\n", "s").unwrap_err();
        assert!(e.to_string().contains("not a prime"), "{e}");
        let e = parse_session("ring p=2 vars=x\nring p=2 vars=x\n", "s").unwrap_err();
        assert!(e.to_string().contains("duplicate ring"), "{e}");
        match parse_session("ring p=2 vars=x,y\npoly f = x**y\n", "s.fpl").unwrap_err() {
            Error::Session { line, column, .. } => {
                assert_eq!(line, 2);
                assert_eq!(column, 12);
            }
            other => panic!("{other:?}"),
        }
        let e = parse_session("ring p=2 vars=x\nwhat x = 1\n", "s").unwrap_err();
        assert!(e.to_string().contains("unknown declaration"), "{e}");
    }
}
