//! JSON encoding: a list of `{lambda_exp, coeff: {terms: [{q_exp, num, den}]}}`.
//!
//! Coefficients that are not Laurent polynomials in `q` (for instance
//! `1/(q - q^-1)^2`) are written with `num_poly`/`den_poly` coefficient lists
//! instead of `terms`.

use super::LaurentPoly;
use crate::error::{AduError, Result};
use crate::scalars::{BigRational, IntPoly, RatFunc};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QTermJson {
    pub q_exp: i64,
    pub num: String,
    pub den: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct CoeffJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub terms: Option<Vec<QTermJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub num_poly: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub den_poly: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentTermJson {
    pub lambda_exp: i64,
    pub coeff: CoeffJson,
}

fn big(s: &str) -> Result<BigInt> {
    s.trim().parse().map_err(|_| AduError::Parse(format!("not an integer: {s:?}")))
}

impl CoeffJson {
    pub fn from_ratfunc(c: &RatFunc) -> Self {
        match c.laurent_terms() {
            Some(terms) => Self {
                terms: Some(
                    terms
                        .into_iter()
                        .map(|(k, r)| QTermJson { q_exp: k, num: r.numer().to_string(), den: r.denom().to_string() })
                        .collect(),
                ),
                ..Self::default()
            },
            None => {
                let (n, d) = c.to_poly_pair();
                let list = |p: &IntPoly| p.coeffs().iter().map(ToString::to_string).collect();
                Self { terms: None, num_poly: Some(list(&n)), den_poly: Some(list(&d)) }
            }
        }
    }

    pub fn to_ratfunc(&self) -> Result<RatFunc> {
        if let Some(terms) = &self.terms {
            let mut parsed = Vec::with_capacity(terms.len());
            for t in terms {
                let den = big(&t.den)?;
                if num_traits::Zero::is_zero(&den) {
                    return Err(AduError::DivisionByZero);
                }
                parsed.push((t.q_exp, BigRational::new(big(&t.num)?, den)));
            }
            return Ok(RatFunc::from_laurent_terms(&parsed));
        }
        match (&self.num_poly, &self.den_poly) {
            (Some(n), Some(d)) => {
                let p = |v: &Vec<String>| -> Result<IntPoly> {
                    Ok(IntPoly::from_coeffs(v.iter().map(|s| big(s)).collect::<Result<_>>()?))
                };
                RatFunc::from_poly_pair(p(n)?, p(d)?)
            }
            _ => Err(AduError::Parse("coefficient needs `terms` or `num_poly`/`den_poly`".into())),
        }
    }
}

impl LaurentPoly {
    pub fn to_json_terms(&self) -> Vec<LaurentTermJson> {
        self.terms()
            .map(|(i, c)| LaurentTermJson { lambda_exp: i, coeff: CoeffJson::from_ratfunc(c) })
            .collect()
    }

    pub fn from_json_terms(terms: &[LaurentTermJson]) -> Result<Self> {
        let mut p = LaurentPoly::zero();
        for t in terms {
            p.add_term(t.lambda_exp, t.coeff.to_ratfunc()?);
        }
        Ok(p)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_terms()).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let terms: Vec<LaurentTermJson> = serde_json::from_str(s)?;
        Self::from_json_terms(&terms)
    }
}
