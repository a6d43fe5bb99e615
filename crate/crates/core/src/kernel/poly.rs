use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::{Coeff, Scalar};
use crate::error::NovaError;

pub const MAX_VARS: usize = 8;

/// Exponent vector ordered by total degree, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct Monomial(Vec<u32>);

impl Monomial {
    fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with rational coefficients.
///
/// Canonical form: `vars` is sorted and lists exactly the variables that occur,
/// and no stored coefficient is zero. Structural equality is therefore
/// polynomial equality.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = Poly::default();
        if !c.is_zero() {
            p.terms.insert(Monomial(Vec::new()), c);
        }
        p
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(vec![1]), Scalar::one());
        Poly {
            vars: vec![name.to_string()],
            terms,
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order as `(exponents, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Scalar)> {
        self.terms.iter().rev().map(|(m, c)| (m.0.as_slice(), c))
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 if self.vars.is_empty() => self.terms.values().next().cloned(),
            _ => None,
        }
    }

    pub fn eval(&self, values: &BTreeMap<String, Scalar>) -> Result<Scalar, NovaError> {
        let mut vals = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            vals.push(
                values
                    .get(v)
                    .cloned()
                    .ok_or_else(|| NovaError::Invalid(format!("no value for variable {v}")))?,
            );
        }
        let mut total = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in vals.iter().zip(&m.0) {
                for _ in 0..e {
                    t *= x;
                }
            }
            total += t;
        }
        Ok(total)
    }

    fn lift(&self, vars: &[String]) -> BTreeMap<Monomial, Scalar> {
        let pos: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("variable in union"))
            .collect();
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; vars.len()];
                for (i, &p) in pos.iter().enumerate() {
                    e[p] = m.0[i];
                }
                (Monomial(e), c.clone())
            })
            .collect()
    }

    fn union_vars(&self, other: &Poly) -> Vec<String> {
        let mut vars: Vec<String> = self.vars.iter().chain(&other.vars).cloned().collect();
        vars.sort();
        vars.dedup();
        vars
    }

    fn from_parts(vars: Vec<String>, terms: BTreeMap<Monomial, Scalar>) -> Poly {
        let mut p = Poly { vars, terms };
        p.terms.retain(|_, c| !c.is_zero());
        let used: Vec<bool> = (0..p.vars.len())
            .map(|i| p.terms.keys().any(|m| m.0[i] > 0))
            .collect();
        if used.iter().all(|&u| u) {
            return p;
        }
        let vars = p
            .vars
            .iter()
            .zip(&used)
            .filter(|(_, &u)| u)
            .map(|(v, _)| v.clone())
            .collect();
        let terms = p
            .terms
            .into_iter()
            .map(|(m, c)| {
                let e =
                    m.0.iter()
                        .zip(&used)
                        .filter(|(_, &u)| u)
                        .map(|(&e, _)| e)
                        .collect();
                (Monomial(e), c)
            })
            .collect();
        Poly { vars, terms }
    }

    fn combine(&self, other: &Poly, sign: &Scalar) -> Poly {
        let vars = self.union_vars(other);
        let mut terms = self.lift(&vars);
        for (m, c) in other.lift(&vars) {
            let entry = terms.entry(m).or_insert_with(Scalar::zero);
            *entry += c * sign;
        }
        Poly::from_parts(vars, terms)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let vars = self.union_vars(other);
        let a = self.lift(&vars);
        let b = other.lift(&vars);
        let mut terms: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (ma, ca) in &a {
            for (mb, cb) in &b {
                let e = ma.0.iter().zip(&mb.0).map(|(x, y)| x + y).collect();
                *terms.entry(Monomial(e)).or_insert_with(Scalar::zero) += ca * cb;
            }
        }
        Poly::from_parts(vars, terms)
    }

    /// Parses sums of terms like `k`, `-2*k*l`, `1/2*k^2`, `3`.
    pub fn parse(text: &str) -> Result<Poly, NovaError> {
        let bad = |why: &str| NovaError::Parse(format!("bad polynomial {text:?}: {why}"));
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty"));
        }
        let mut pieces = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 {
                let prev = compact[..i].chars().last().unwrap();
                if prev != '*' && prev != '^' {
                    pieces.push(&compact[start..i]);
                    start = i;
                }
            }
        }
        pieces.push(&compact[start..]);
        let mut total = Poly::zero();
        for piece in pieces {
            let (neg, body) = match piece.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, piece.strip_prefix('+').unwrap_or(piece)),
            };
            if body.is_empty() {
                return Err(bad("dangling sign"));
            }
            let mut term = Poly::constant(Scalar::from_int(if neg { -1 } else { 1 }));
            for factor in body.split('*') {
                if factor.is_empty() {
                    return Err(bad("empty factor"));
                }
                if factor.starts_with(|c: char| c.is_ascii_digit()) {
                    term = term.mul(&Poly::constant(Scalar::parse(factor)?));
                    continue;
                }
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => (n, e.parse::<u32>().map_err(|_| bad("bad exponent"))?),
                    None => (factor, 1),
                };
                if !name.chars().all(|c| c.is_alphanumeric() || c == '_')
                    || !name.starts_with(|c: char| c.is_alphabetic())
                {
                    return Err(bad("bad variable name"));
                }
                for _ in 0..exp {
                    term = term.mul(&Poly::var(name));
                }
            }
            total = total.add_ref(&term);
        }
        if total.vars.len() > MAX_VARS {
            return Err(NovaError::TooManyParameters {
                found: total.vars.len(),
                limit: MAX_VARS,
            });
        }
        Ok(total)
    }
}

impl Coeff for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn from_scalar(s: Scalar) -> Self {
        Poly::constant(s)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.combine(other, &Scalar::one())
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.combine(other, &Scalar::from_int(-1))
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }
    fn neg_ref(&self) -> Self {
        self.scale(&Scalar::from_int(-1))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (exps, c)) in self.terms().enumerate() {
            let mono: Vec<String> = self
                .vars
                .iter()
                .zip(exps)
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| {
                    if e == 1 {
                        v.clone()
                    } else {
                        format!("{v}^{e}")
                    }
                })
                .collect();
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{mag}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    #[test]
    fn cancellation_drops_variables() {
        let k = Poly::var("k");
        let l = Poly::var("l");
        let z = k.mul(&l).sub_ref(&l.mul(&k));
        assert!(z.is_zero());
        assert_eq!(z, Poly::zero());
        assert!(z.vars().is_empty());
    }

    #[test]
    fn parse_round_trip() {
        for s in ["k", "-k", "2*k*l - 1/2", "k^2 + 3*l", "0", "-7/3"] {
            let a = p(s);
            assert_eq!(p(&a.to_string()), a, "{s} -> {a}");
        }
        assert_eq!(p("k*k - k^2"), Poly::zero());
    }

    #[test]
    fn rejects_bad_input() {
        for s in ["", "k*", "2**k", "k^x", "1/0*k", "(k"] {
            assert!(Poly::parse(s).is_err(), "{s}");
        }
        assert!(Poly::parse("a+b+c+d+e+f+g+h+i").is_err());
    }

    #[test]
    fn graded_lex_display() {
        assert_eq!(p("1 + l + k^2 + k*l").to_string(), "k^2 + k*l + l + 1");
    }

    #[test]
    fn evaluates() {
        let mut vals = BTreeMap::new();
        vals.insert("k".to_string(), Scalar::from_int(3));
        vals.insert("l".to_string(), Scalar::ratio(1, 2));
        assert_eq!(p("k^2 - 2*k*l").eval(&vals).unwrap(), Scalar::from_int(6));
    }
}
