//! Plain-text inputs: comma-separated vectors and element products such as
//! `E1 E2^(2) E1^3`.

use crate::error::{Error, Result};

pub fn parse_vector(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|_| Error::BadInput(format!("bad vector entry {x:?} in {s:?}"))))
        .collect()
}

/// One factor of a product: node, exponent, and whether it is a divided power.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Factor {
    pub node: usize,
    pub exp: u32,
    pub divided: bool,
}

pub fn parse_element(s: &str) -> Result<Vec<Factor>> {
    let bad = |t: &str| Error::BadInput(format!("cannot read factor {t:?}; expected Ei, Ei^m or Ei^(m)"));
    let mut out = Vec::new();
    for tok in s.split(|c: char| c.is_whitespace() || c == '*').filter(|t| !t.is_empty()) {
        let body = tok.strip_prefix('E').ok_or_else(|| bad(tok))?;
        let (node, power) = match body.split_once('^') {
            Some((n, p)) => (n, Some(p)),
            None => (body, None),
        };
        let node = node.parse::<usize>().map_err(|_| bad(tok))?;
        let (exp, divided) = match power {
            None => (1, false),
            Some(p) => match p.strip_prefix('(').and_then(|p| p.strip_suffix(')')) {
                Some(m) => (m.parse::<u32>().map_err(|_| bad(tok))?, true),
                None => (p.parse::<u32>().map_err(|_| bad(tok))?, false),
            },
        };
        out.push(Factor { node, exp, divided });
    }
    if out.is_empty() {
        return Err(Error::BadInput("empty element".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar() {
        assert_eq!(parse_vector("1, 0,2").unwrap(), vec![1, 0, 2]);
        assert!(parse_vector("1,x").is_err());
        let f = parse_element("E1 E2^(2)*E3^3").unwrap();
        assert_eq!(
            f,
            vec![
                Factor { node: 1, exp: 1, divided: false },
                Factor { node: 2, exp: 2, divided: true },
                Factor { node: 3, exp: 3, divided: false }
            ]
        );
        assert!(parse_element("F1").is_err());
        assert!(parse_element("E1^(").is_err());
        assert!(parse_element("  ").is_err());
    }
}
