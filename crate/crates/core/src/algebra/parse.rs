//! Text grammar for polynomials:
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := coeff | var | var '^' uint | '(' expr ')' ['^' uint]
//! coeff  := ['-'] digits ['/' digits]
//! ```
//!
//! A leading `-` on a term is accepted as negation.

use num_bigint::BigInt;

use crate::algebra::field::FieldConfig;
use crate::algebra::monomial::MonomialOrder;
use crate::algebra::poly::{Polynomial, Ring, RingRef};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => out.push((start, Tok::Plus)),
            '-' => out.push((start, Tok::Minus)),
            '*' => out.push((start, Tok::Star)),
            '^' => out.push((start, Tok::Caret)),
            '/' => out.push((start, Tok::Slash)),
            '(' => out.push((start, Tok::LParen)),
            ')' => out.push((start, Tok::RParen)),
            d if d.is_ascii_digit() => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push((start, Tok::Num(s.parse().expect("digits"))));
                continue;
            }
            a if a.is_alphabetic() || a == '_' => {
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(chars[start..i].iter().collect())));
                continue;
            }
            other => {
                return Err(Error::Syntax(format!("unexpected character '{other}' at {start}")));
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    ring: &'a RingRef,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.1.clone());
        self.pos += 1;
        t
    }

    fn err(&self, msg: &str) -> Error {
        match self.toks.get(self.pos) {
            Some((at, t)) => Error::Syntax(format!("{msg} at {at} (found {t:?})")),
            None => Error::Syntax(format!("{msg} at end of input")),
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.signed_term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.signed_term()?;
                    acc = acc.add(&t);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.signed_term()?;
                    acc = acc.sub(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn signed_term(&mut self) -> Result<Polynomial> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(self.signed_term()?.neg());
        }
        if self.peek() == Some(&Tok::Plus) {
            self.pos += 1;
        }
        self.term()
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<u32> {
        match self.next() {
            Some(Tok::Num(n)) => u32::try_from(&n)
                .ok()
                .filter(|&e| e <= 255)
                .ok_or_else(|| Error::Syntax(format!("exponent {n} too large"))),
            _ => {
                self.pos -= 1;
                Err(self.err("expected an unsigned exponent"))
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let field = *self.ring.field();
        match self.next() {
            Some(Tok::Num(n)) => {
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    match self.next() {
                        Some(Tok::Num(d)) => {
                            if d == BigInt::from(0) {
                                return Err(Error::Syntax("zero denominator".into()));
                            }
                            let c = field.from_ratio(&n, &d)?;
                            Ok(Polynomial::constant(self.ring, c))
                        }
                        _ => {
                            self.pos -= 1;
                            Err(self.err("expected a denominator"))
                        }
                    }
                } else {
                    Ok(Polynomial::constant(self.ring, field.from_bigint(&n)))
                }
            }
            Some(Tok::Minus) => {
                // signed coefficient inside a product, e.g. `x*-2`
                match self.next() {
                    Some(Tok::Num(_)) => {
                        self.pos -= 1;
                        Ok(self.factor()?.neg())
                    }
                    _ => {
                        self.pos -= 1;
                        Err(self.err("expected a number after '-'"))
                    }
                }
            }
            Some(Tok::Ident(name)) => {
                let v = Polynomial::var_named(self.ring, &name)?;
                if self.peek() == Some(&Tok::Caret) {
                    self.pos += 1;
                    let e = self.exponent()?;
                    Ok(v.pow(e))
                } else {
                    Ok(v)
                }
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                if self.next() != Some(Tok::RParen) {
                    self.pos -= 1;
                    return Err(self.err("expected ')'"));
                }
                if self.peek() == Some(&Tok::Caret) {
                    self.pos += 1;
                    let e = self.exponent()?;
                    Ok(inner.pow(e))
                } else {
                    Ok(inner)
                }
            }
            _ => {
                self.pos -= 1;
                Err(self.err("expected a coefficient, variable or '('"))
            }
        }
    }
}

/// Parse into an existing ring.
pub fn parse_in(src: &str, ring: &RingRef) -> Result<Polynomial> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(Error::Syntax("empty input".into()));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        ring,
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

/// Parse `src` over a fresh grevlex ring on `registry`.
pub fn parse_poly<S: AsRef<str>>(src: &str, registry: &[S], field: FieldConfig) -> Result<Polynomial> {
    let ring = Ring::new(registry, field, MonomialOrder::GrevLex)?;
    parse_in(src, &ring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::Scalar;
    use crate::algebra::monomial::Monomial;
    use num_rational::BigRational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn square_of_difference() {
        let f = FieldConfig::default();
        let a = parse_poly("x^2 - 2*x*y + y^2", &["x", "y"], f).unwrap();
        let b = parse_poly("(x-y)*(x-y)", &["x", "y"], f).unwrap();
        let c = parse_poly("(x - y)^2", &["x", "y"], f).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn zero_has_no_terms() {
        let z = parse_poly("0", &["x"], FieldConfig::default()).unwrap();
        assert!(z.is_zero());
        assert!(z.terms().is_empty());
    }

    #[test]
    fn constants_reduce_mod_small_prime() {
        let f = FieldConfig::small_prime(101).unwrap();
        let p = parse_poly("u0^3 + 7", &["u0", "u1"], f).unwrap();
        assert_eq!(p.constant_term(), Scalar::Mod(7));
        let q = parse_poly("u0 + 205", &["u0", "u1"], f).unwrap();
        assert_eq!(q.constant_term(), Scalar::Mod(3));
    }

    #[test]
    fn rational_literals() {
        let q = FieldConfig::rationals(0);
        let p = parse_poly("1/2*x - -3/4", &["x"], q).unwrap();
        let half = Scalar::Rat(Box::new(BigRational::new(1.into(), 2.into())));
        assert_eq!(p.coeff(&Monomial::var(1, 0)), half);
        assert_eq!(
            p.constant_term(),
            Scalar::Rat(Box::new(BigRational::new(3.into(), 4.into())))
        );
    }

    #[test]
    fn errors() {
        let f = FieldConfig::default();
        assert!(matches!(parse_poly("x +", &["x"], f), Err(Error::Syntax(_))));
        assert!(matches!(parse_poly("x ** 2", &["x"], f), Err(Error::Syntax(_))));
        assert!(matches!(parse_poly("(x", &["x"], f), Err(Error::Syntax(_))));
        assert!(matches!(parse_poly("x $ y", &["x"], f), Err(Error::Syntax(_))));
        assert!(matches!(parse_poly("1/0", &["x"], f), Err(Error::Syntax(_))));
        assert!(matches!(parse_poly("x*w", &["x"], f), Err(Error::UnknownVariable(_))));
    }

    // Evaluate the source text directly, as an independent interpreter.
    fn eval_text(src: &str, vars: &[&str], pt: &[i64]) -> BigRational {
        let expr = src.replace(' ', "");
        fn go(s: &[u8], i: &mut usize, vars: &[&str], pt: &[i64]) -> BigRational {
            let mut acc = term(s, i, vars, pt);
            while *i < s.len() && (s[*i] == b'+' || s[*i] == b'-') {
                let neg = s[*i] == b'-';
                *i += 1;
                let t = term(s, i, vars, pt);
                acc = if neg { acc - t } else { acc + t };
            }
            acc
        }
        fn term(s: &[u8], i: &mut usize, vars: &[&str], pt: &[i64]) -> BigRational {
            let mut acc = factor(s, i, vars, pt);
            while *i < s.len() && s[*i] == b'*' {
                *i += 1;
                acc *= factor(s, i, vars, pt);
            }
            acc
        }
        fn factor(s: &[u8], i: &mut usize, vars: &[&str], pt: &[i64]) -> BigRational {
            let base = if s[*i] == b'(' {
                *i += 1;
                let v = go(s, i, vars, pt);
                *i += 1;
                v
            } else if s[*i].is_ascii_digit() {
                let st = *i;
                while *i < s.len() && s[*i].is_ascii_digit() {
                    *i += 1;
                }
                let n: i64 = std::str::from_utf8(&s[st..*i]).unwrap().parse().unwrap();
                BigRational::from_integer(n.into())
            } else {
                let st = *i;
                while *i < s.len() && s[*i].is_ascii_alphanumeric() {
                    *i += 1;
                }
                let name = std::str::from_utf8(&s[st..*i]).unwrap();
                let k = vars.iter().position(|v| *v == name).unwrap();
                BigRational::from_integer(pt[k].into())
            };
            if *i < s.len() && s[*i] == b'^' {
                *i += 1;
                let st = *i;
                while *i < s.len() && s[*i].is_ascii_digit() {
                    *i += 1;
                }
                let e: i32 = std::str::from_utf8(&s[st..*i]).unwrap().parse().unwrap();
                return num_traits::pow::Pow::pow(base, e);
            }
            base
        }
        let mut i = 0;
        go(expr.as_bytes(), &mut i, vars, pt)
    }

    fn random_expr(rng: &mut ChaCha8Rng, depth: u32) -> String {
        let vars = ["x", "y", "z"];
        let nterms = rng.gen_range(1..4);
        let mut s = String::new();
        for k in 0..nterms {
            if k > 0 {
                s.push_str(if rng.gen_bool(0.5) { " + " } else { " - " });
            }
            let nf = rng.gen_range(1..4);
            for j in 0..nf {
                if j > 0 {
                    s.push('*');
                }
                match rng.gen_range(0..4) {
                    0 => s.push_str(&rng.gen_range(0..30).to_string()),
                    1 if depth > 0 => {
                        s.push('(');
                        s.push_str(&random_expr(rng, depth - 1));
                        s.push(')');
                        if rng.gen_bool(0.3) {
                            s.push_str(&format!("^{}", rng.gen_range(0..3)));
                        }
                    }
                    _ => {
                        s.push_str(vars[rng.gen_range(0..3)]);
                        if rng.gen_bool(0.5) {
                            s.push_str(&format!("^{}", rng.gen_range(0..4)));
                        }
                    }
                }
            }
        }
        s
    }

    #[test]
    fn parsed_polynomial_matches_text_at_random_points() {
        let vars = ["x", "y", "z"];
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let q = FieldConfig::rationals(0);
        for _ in 0..100 {
            let src = random_expr(&mut rng, 2);
            let p = parse_poly(&src, &vars, q).unwrap();
            let pt: Vec<i64> = (0..3).map(|_| rng.gen_range(-9..10)).collect();
            let want = eval_text(&src, &vars, &pt);
            let got = p.evaluate(&pt.iter().map(|&v| q.from_i64(v)).collect::<Vec<_>>()).unwrap();
            assert_eq!(got, Scalar::Rat(Box::new(want)), "{src}");
        }
    }

    #[test]
    fn modular_evaluation_agrees_with_rational_reduction() {
        let vars = ["x", "y", "z"];
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let q = FieldConfig::rationals(0);
        let fp = FieldConfig::default();
        for _ in 0..100 {
            let num = random_expr(&mut rng, 1);
            let src = format!("{num} + {}/{}*x*y", rng.gen_range(1..50), rng.gen_range(1..50));
            let pq = parse_poly(&src, &vars, q).unwrap();
            let pp = parse_poly(&src, &vars, fp).unwrap();
            let pt: Vec<(i64, i64)> = (0..3)
                .map(|_| (rng.gen_range(-40..40), rng.gen_range(1..40)))
                .collect();
            let ptq: Vec<Scalar> = pt
                .iter()
                .map(|&(a, b)| q.from_ratio(&a.into(), &b.into()).unwrap())
                .collect();
            let ptp: Vec<Scalar> = pt
                .iter()
                .map(|&(a, b)| fp.from_ratio(&a.into(), &b.into()).unwrap())
                .collect();
            let vq = match pq.evaluate(&ptq).unwrap() {
                Scalar::Rat(r) => *r,
                _ => unreachable!(),
            };
            assert_eq!(fp.from_rational(&vq).unwrap(), pp.evaluate(&ptp).unwrap());
        }
    }
}
