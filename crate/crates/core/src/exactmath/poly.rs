//! Sparse multivariate polynomials over exact rationals.
//!
//! A polynomial over `vars` variables stores a map from dense fixed-length
//! exponent vectors to nonzero coefficients; the variable ordering is the
//! dual-basis coordinate ordering fixed by the Lie-algebra side, so no name
//! resolution is ever needed.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{rat_pow, Rat};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePoly {
    vars: usize,
    terms: BTreeMap<Vec<u16>, Rat>,
}

impl SparsePoly {
    pub fn zero(vars: usize) -> Self {
        Self {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, c: Rat) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars], c);
        p
    }

    /// The polynomial `x_index`.
    pub fn var(vars: usize, index: usize) -> Result<Self> {
        if index >= vars {
            return Err(Error::VariableOutOfRange { index, vars });
        }
        let mut exps = vec![0u16; vars];
        exps[index] = 1;
        Ok(Self::monomial(vars, exps, Rat::one()))
    }

    /// A single term; `exps` must have length `vars`.
    pub fn monomial(vars: usize, exps: Vec<u16>, coeff: Rat) -> Self {
        assert_eq!(exps.len(), vars, "exponent vector length");
        let mut p = Self::zero(vars);
        p.add_term(exps, coeff);
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u16], &Rat)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn total_degree(&self) -> u16 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u16>())
            .max()
            .unwrap_or(0)
    }

    /// Every term has total degree `d` (vacuously true for zero).
    pub fn is_homogeneous_of_degree(&self, d: u16) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u16>() == d)
    }

    pub fn constant_term(&self) -> Rat {
        self.terms
            .get(&vec![0u16; self.vars])
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u16>, coeff: Rat) {
        assert_eq!(exps.len(), self.vars, "exponent vector length");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        Self {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(self.vars, Rat::one());
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation; `point` must have length `vars`.
    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.vars {
            return Err(Error::DimensionMismatch {
                expected: self.vars,
                got: point.len(),
            });
        }
        let mut acc = Rat::zero();
        for (exps, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    term *= rat_pow(&point[i], e);
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn partial(&self, var: usize) -> Result<Self> {
        if var >= self.vars {
            return Err(Error::VariableOutOfRange {
                index: var,
                vars: self.vars,
            });
        }
        let mut out = Self::zero(self.vars);
        for (exps, coeff) in &self.terms {
            let e = exps[var];
            if e == 0 {
                continue;
            }
            let mut new_exps = exps.clone();
            new_exps[var] = e - 1;
            out.add_term(new_exps, coeff * Rat::from_integer(e.into()));
        }
        Ok(out)
    }

    /// Substitute `substitutions[i]` for variable `i`. All substitutions
    /// must live in one common target variable space.
    pub fn compose(&self, substitutions: &[SparsePoly]) -> Result<Self> {
        if substitutions.len() != self.vars {
            return Err(Error::ArityMismatch {
                vars: self.vars,
                given: substitutions.len(),
            });
        }
        let target_vars = substitutions.first().map_or(0, SparsePoly::vars);
        for s in substitutions {
            if s.vars != target_vars {
                return Err(Error::DimensionMismatch {
                    expected: target_vars,
                    got: s.vars,
                });
            }
        }
        let mut out = Self::zero(target_vars);
        for (exps, coeff) in &self.terms {
            let mut term = Self::constant(target_vars, coeff.clone());
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    term = &term * &substitutions[i].pow(u32::from(e));
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Render with the given variable names (one per variable), terms in
    /// descending lexicographic exponent order.
    pub fn to_string_named(&self, names: &[String]) -> String {
        assert_eq!(names.len(), self.vars, "one name per variable");
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (exps, coeff)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|&(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        names[i].clone()
                    } else {
                        format!("{}^{}", names[i], e)
                    }
                })
                .collect();
            let abs = coeff.abs();
            let body = if mono.is_empty() {
                abs.to_string()
            } else if abs.is_one() {
                mono.join("*")
            } else {
                format!("{}*{}", abs, mono.join("*"))
            };
            if idx == 0 {
                if coeff.is_negative() {
                    out.push('-');
                }
            } else if coeff.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.vars).map(|i| format!("x{i}")).collect();
        f.write_str(&self.to_string_named(&names))
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, other: Self) -> SparsePoly {
        assert_eq!(self.vars, other.vars, "variable count");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, other: Self) -> SparsePoly {
        self + &(-other)
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, other: Self) -> SparsePoly {
        assert_eq!(self.vars, other.vars, "variable count");
        let mut out = SparsePoly::zero(self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exps: Vec<u16> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(exps, c1 * c2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn x(vars: usize, i: usize) -> SparsePoly {
        SparsePoly::var(vars, i).unwrap()
    }

    #[test]
    fn eval_product() {
        let p = &x(2, 0) * &x(2, 1);
        assert_eq!(p.eval(&[rat(2), rat(3)]).unwrap(), rat(6));
    }

    #[test]
    fn eval_length_mismatch_is_an_error() {
        let p = x(2, 0);
        assert!(matches!(
            p.eval(&[rat(1)]),
            Err(Error::DimensionMismatch { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn compose_square_of_sum() {
        // x0^2 with x0 -> a + b gives a^2 + 2ab + b^2
        let p = x(1, 0).pow(2);
        let sum = &x(2, 0) + &x(2, 1);
        let composed = p.compose(&[sum]).unwrap();
        let mut expected = SparsePoly::zero(2);
        expected.add_term(vec![2, 0], rat(1));
        expected.add_term(vec![1, 1], rat(2));
        expected.add_term(vec![0, 2], rat(1));
        assert_eq!(composed, expected);
    }

    #[test]
    fn compose_collapses_to_zero() {
        // x0*x1 - x2*x3 with every variable sent to 0
        let p = &(&x(4, 0) * &x(4, 1)) - &(&x(4, 2) * &x(4, 3));
        let zero = SparsePoly::zero(1);
        let composed = p.compose(&[zero.clone(), zero.clone(), zero.clone(), zero]).unwrap();
        assert!(composed.is_zero());
    }

    #[test]
    fn compose_arity_mismatch() {
        let p = x(2, 0);
        assert!(matches!(
            p.compose(&[SparsePoly::zero(1)]),
            Err(Error::ArityMismatch { vars: 2, given: 1 })
        ));
    }

    #[test]
    fn partial_of_monomial() {
        // d(x0^2 x1)/dx0 = 2 x0 x1
        let p = SparsePoly::monomial(2, vec![2, 1], rat(1));
        let dp = p.partial(0).unwrap();
        assert_eq!(dp, SparsePoly::monomial(2, vec![1, 1], rat(2)));
    }

    #[test]
    fn partial_of_constant_is_zero() {
        let p = SparsePoly::constant(3, rat(7));
        assert!(p.partial(0).unwrap().is_zero());
    }

    #[test]
    fn partial_index_out_of_range() {
        let p = x(2, 0);
        assert!(matches!(
            p.partial(2),
            Err(Error::VariableOutOfRange { index: 2, vars: 2 })
        ));
    }

    #[test]
    fn cancellation_removes_stored_terms() {
        let p = &x(1, 0) - &x(1, 0);
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }

    #[test]
    fn named_rendering() {
        let names = vec!["z1".to_string(), "y1".to_string()];
        let p = &SparsePoly::monomial(2, vec![1, 1], rat(1))
            - &SparsePoly::monomial(2, vec![0, 2], frac_half());
        assert_eq!(p.to_string_named(&names), "z1*y1 - 1/2*y1^2");
    }

    fn frac_half() -> Rat {
        crate::exactmath::frac(1, 2)
    }
}
