use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, parse_rational, Rational};
use super::NumError;

/// Laurent polynomial in named variables with rational coefficients.
///
/// Terms are keyed by dense exponent vectors; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    vars: Vec<String>,
    terms: HashMap<Vec<i32>, Rational>,
}

fn grlex(a: &[i32], b: &[i32]) -> Ordering {
    let da: i64 = a.iter().map(|&x| x as i64).sum();
    let db: i64 = b.iter().map(|&x| x as i64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl LaurentPoly {
    pub fn zero(vars: &[&str]) -> Self {
        LaurentPoly { vars: vars.iter().map(|s| s.to_string()).collect(), terms: HashMap::new() }
    }

    pub fn constant(vars: &[&str], c: Rational) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars.len()], c);
        p
    }

    pub fn one(vars: &[&str]) -> Self {
        Self::constant(vars, Rational::one())
    }

    /// The monomial `c · Π x_i^{e_i}`.
    pub fn monomial(vars: &[&str], exps: Vec<i32>, c: Rational) -> Self {
        assert_eq!(exps.len(), vars.len());
        let mut p = Self::zero(vars);
        p.add_term(exps, c);
        p
    }

    pub fn var(vars: &[&str], i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::monomial(vars, e, Rational::one())
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    fn like(&self) -> Self {
        LaurentPoly { vars: self.vars.clone(), terms: HashMap::new() }
    }

    fn check_vars(&self, o: &Self) {
        assert_eq!(self.vars, o.vars, "Laurent polynomials over different variables");
    }

    fn add_term(&mut self, e: Vec<i32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e);
        match entry {
            std::collections::hash_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lexicographic order.
    pub fn terms(&self) -> Vec<(Vec<i32>, Rational)> {
        let mut t: Vec<_> = self.terms.iter().map(|(e, c)| (e.clone(), c.clone())).collect();
        t.sort_by(|a, b| grlex(&b.0, &a.0));
        t
    }

    pub fn coeff(&self, exps: &[i32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Minimum and maximum exponent of variable `i`, or `None` for the zero polynomial.
    pub fn exponent_range(&self, i: usize) -> Option<(i32, i32)> {
        let lo = self.terms.keys().map(|e| e[i]).min()?;
        let hi = self.terms.keys().map(|e| e[i]).max()?;
        Some((lo, hi))
    }

    pub fn all_coefficients_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check_vars(o);
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check_vars(o);
        let mut r = self.like();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, c1 * c2);
            }
        }
        r
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut r = self.like();
        for (e, x) in &self.terms {
            r.add_term(e.clone(), x * c);
        }
        r
    }

    fn shift(&self, by: &[i32]) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.iter().zip(by).map(|(a, b)| a + b).collect(), c.clone())).collect(),
        }
    }

    fn min_exponents(&self) -> Vec<i32> {
        (0..self.vars.len()).map(|i| self.terms.keys().map(|e| e[i]).min().unwrap_or(0)).collect()
    }

    fn leading(&self) -> Option<(&Vec<i32>, &Rational)> {
        self.terms.iter().max_by(|a, b| grlex(a.0, b.0))
    }

    /// Exact quotient `self / q`, failing with `InexactDivision` when none exists.
    pub fn exact_div(&self, q: &Self) -> Result<Self, NumError> {
        self.check_vars(q);
        if q.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(self.like());
        }
        // Reduce to polynomials: q = m_q·q0 with q0 free of monomial factors,
        // p = m_p·p0; then p/q is Laurent iff q0 divides p0 in the polynomial ring.
        let mq = q.min_exponents();
        let mp = self.min_exponents();
        let q0 = q.shift(&mq.iter().map(|x| -x).collect::<Vec<_>>());
        let mut rem = self.shift(&mp.iter().map(|x| -x).collect::<Vec<_>>());
        let (lq_e, lq_c) = {
            let (e, c) = q0.leading().unwrap();
            (e.clone(), c.clone())
        };
        let mut quot = self.like();
        while let Some((le, lc)) = rem.leading().map(|(e, c)| (e.clone(), c.clone())) {
            let d: Vec<i32> = le.iter().zip(&lq_e).map(|(a, b)| a - b).collect();
            if d.iter().any(|&x| x < 0) {
                return Err(NumError::InexactDivision);
            }
            let c = lc / &lq_c;
            let t = LaurentPoly::monomial_from(&self.vars, d.clone(), c.clone());
            rem = rem.sub(&t.mul(&q0));
            quot.add_term(d, c);
        }
        let back: Vec<i32> = mp.iter().zip(&mq).map(|(a, b)| a - b).collect();
        Ok(quot.shift(&back))
    }

    fn monomial_from(vars: &[String], exps: Vec<i32>, c: Rational) -> Self {
        let mut p = LaurentPoly { vars: vars.to_vec(), terms: HashMap::new() };
        p.add_term(exps, c);
        p
    }

    /// Evaluates at rational values (all nonzero when negative exponents occur).
    pub fn eval(&self, values: &[Rational]) -> Result<Rational, NumError> {
        assert_eq!(values.len(), self.vars.len());
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in values.iter().zip(e) {
                if k < 0 && x.is_zero() {
                    return Err(NumError::DivisionByZero);
                }
                let p = num_traits::pow(x.clone(), k.unsigned_abs() as usize);
                t = if k < 0 { t / p } else { t * p };
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Parses the output format of `Display`, e.g. `"2*T + 1 + 3/2*T^-1"`.
    pub fn parse(s: &str, vars: &[&str]) -> Result<Self, NumError> {
        let bad = |m: &str| NumError::Parse(format!("{m} in polynomial {s:?}"));
        let mut p = Self::zero(vars);
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(bad("empty input"));
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for (i, &ch) in chars.iter().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && chars[i - 1] != '^' {
                terms.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            } else if ch == '-' && i == 0 {
                neg = true;
            } else {
                cur.push(ch);
            }
        }
        terms.push((neg, cur));
        for (neg, t) in terms {
            if t.is_empty() {
                return Err(bad("empty term"));
            }
            let mut c = Rational::one();
            let mut e = vec![0i32; vars.len()];
            for f in t.split('*') {
                if f.starts_with(|ch: char| ch.is_ascii_digit()) {
                    c *= parse_rational(f)?;
                } else {
                    let (name, ex) = match f.split_once('^') {
                        Some((n, x)) => (n, x.parse::<i32>().map_err(|_| bad("bad exponent"))?),
                        None => (f, 1),
                    };
                    let i = vars.iter().position(|v| *v == name).ok_or_else(|| bad("unknown variable"))?;
                    e[i] += ex;
                }
            }
            p.add_term(e, if neg { -c } else { c });
        }
        Ok(p)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(i, &x)| if x == 1 { self.vars[i].clone() } else { format!("{}^{}", self.vars[i], x) })
                .collect();
            if mono.is_empty() {
                write!(f, "{}", format_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rational(&a), mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::{rat, rat_int};

    const T: &[&str] = &["T"];

    fn t() -> LaurentPoly {
        LaurentPoly::var(T, 0)
    }

    fn c(x: i64) -> LaurentPoly {
        LaurentPoly::constant(T, rat_int(x))
    }

    #[test]
    fn six_over_t() {
        let r = c(6).exact_div(&t()).unwrap();
        assert_eq!(r.to_string(), "6*T^-1");
        assert_eq!(r.exponent_range(0), Some((-1, -1)));
    }

    #[test]
    fn identity_divisor_and_factorization() {
        let p = t().mul(&t()).add(&c(3));
        assert_eq!(p.exact_div(&c(1)).unwrap(), p);
        let num = t().mul(&t()).sub(&c(1));
        let den = t().sub(&c(1));
        assert_eq!(num.exact_div(&den).unwrap().to_string(), "T + 1");
    }

    #[test]
    fn inexact_division_detected() {
        let num = t().add(&c(1));
        let den = t().sub(&c(1));
        assert_eq!(num.exact_div(&den), Err(NumError::InexactDivision));
    }

    #[test]
    fn laurent_quotient_with_negative_powers() {
        // (T + T^-1)(2 + T^-2) / (T + T^-1) = 2 + T^-2
        let a = t().add(&c(1).exact_div(&t()).unwrap());
        let b = c(2).add(&LaurentPoly::monomial(T, vec![-2], rat_int(1)));
        assert_eq!(a.mul(&b).exact_div(&a).unwrap(), b);
    }

    #[test]
    fn multivariate_division() {
        let v = &["x", "y"];
        let x = LaurentPoly::var(v, 0);
        let y = LaurentPoly::var(v, 1);
        let p = x.add(&y).mul(&x.sub(&y.scale(&rat(3, 2))));
        assert_eq!(p.exact_div(&x.add(&y)).unwrap(), x.sub(&y.scale(&rat(3, 2))));
        assert!(x.exact_div(&x.add(&y)).is_err());
    }

    #[test]
    fn parse_round_trip() {
        let p = LaurentPoly::parse("2*T + 1 - 3/2*T^-1", T).unwrap();
        assert_eq!(p.to_string(), "2*T + 1 - 3/2*T^-1");
        assert_eq!(LaurentPoly::parse(&p.to_string(), T).unwrap(), p);
        assert_eq!(p.eval(&[rat_int(2)]).unwrap(), rat(17, 4));
        assert!(LaurentPoly::parse("2*U", T).is_err());
    }
}
