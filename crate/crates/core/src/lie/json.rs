//! JSON interchange for elements and tensors.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::element::{GlElement, Pos};
use super::tensor::{ThreeTensor, TwoTensor};
use crate::error::{Error, Result};
use crate::exact::{LaurentPoly, Rational, Scalar};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct TwoTerm {
    a: [u16; 2],
    b: [u16; 2],
    c: String,
}

#[derive(Serialize, Deserialize)]
struct ThreeTerm {
    a: [u16; 2],
    b: [u16; 2],
    d: [u16; 2],
    c: String,
}

#[derive(Serialize, Deserialize)]
struct ElementTerm {
    pos: [u16; 2],
    c: String,
}

#[derive(Serialize, Deserialize)]
struct Envelope<T> {
    v: u32,
    n: usize,
    ring: String,
    terms: Vec<T>,
}

fn pair(p: &Pos) -> [u16; 2] {
    [p.row, p.col]
}

fn pos(n: usize, a: [u16; 2]) -> Result<Pos> {
    Pos::checked(n, a[0] as i64, a[1] as i64)
        .ok_or_else(|| Error::Parse(format!("index ({}, {}) out of range for n = {n}", a[0], a[1])))
}

fn check_envelope<T>(e: &Envelope<T>, ring: &str) -> Result<()> {
    if e.v != FORMAT_VERSION {
        return Err(Error::Parse(format!("unsupported format version {}", e.v)));
    }
    if e.ring != ring {
        return Err(Error::Parse(format!("expected ring {ring}, found {}", e.ring)));
    }
    if e.n == 0 {
        return Err(Error::Parse("n must be positive".into()));
    }
    Ok(())
}

pub fn two_to_json<S: Scalar>(t: &TwoTensor<S>) -> Value {
    let terms = t
        .terms()
        .iter()
        .map(|((a, b), c)| TwoTerm { a: pair(a), b: pair(b), c: c.to_string() })
        .collect();
    serde_json::to_value(Envelope { v: FORMAT_VERSION, n: t.n(), ring: S::RING.into(), terms })
        .expect("serializable")
}

pub fn two_from_json<S: Scalar>(v: &Value) -> Result<TwoTensor<S>> {
    let e: Envelope<TwoTerm> = serde_json::from_value(v.clone())?;
    check_envelope(&e, S::RING)?;
    let mut terms = Vec::with_capacity(e.terms.len());
    for t in e.terms {
        terms.push(((pos(e.n, t.a)?, pos(e.n, t.b)?), S::parse(&t.c)?));
    }
    Ok(TwoTensor::from_terms(e.n, terms))
}

pub fn three_to_json<S: Scalar>(t: &ThreeTensor<S>) -> Value {
    let terms = t
        .terms()
        .iter()
        .map(|((a, b, d), c)| ThreeTerm { a: pair(a), b: pair(b), d: pair(d), c: c.to_string() })
        .collect();
    serde_json::to_value(Envelope { v: FORMAT_VERSION, n: t.n(), ring: S::RING.into(), terms })
        .expect("serializable")
}

pub fn three_from_json<S: Scalar>(v: &Value) -> Result<ThreeTensor<S>> {
    let e: Envelope<ThreeTerm> = serde_json::from_value(v.clone())?;
    check_envelope(&e, S::RING)?;
    let mut terms = Vec::with_capacity(e.terms.len());
    for t in e.terms {
        terms.push(((pos(e.n, t.a)?, pos(e.n, t.b)?, pos(e.n, t.d)?), S::parse(&t.c)?));
    }
    Ok(ThreeTensor::from_terms(e.n, terms))
}

pub fn element_to_json<S: Scalar>(x: &GlElement<S>) -> Value {
    let terms = x.entries().iter().map(|(p, c)| ElementTerm { pos: pair(p), c: c.to_string() }).collect();
    serde_json::to_value(Envelope { v: FORMAT_VERSION, n: x.n(), ring: S::RING.into(), terms })
        .expect("serializable")
}

pub fn element_from_json<S: Scalar>(v: &Value) -> Result<GlElement<S>> {
    let e: Envelope<ElementTerm> = serde_json::from_value(v.clone())?;
    check_envelope(&e, S::RING)?;
    let mut entries = Vec::with_capacity(e.terms.len());
    for t in e.terms {
        entries.push((pos(e.n, t.pos)?, S::parse(&t.c)?));
    }
    Ok(GlElement::from_entries(e.n, entries))
}

/// A two-tensor read from JSON in whichever ring it declares.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyTwoTensor {
    Q(TwoTensor<Rational>),
    Qt(TwoTensor<LaurentPoly>),
}

impl AnyTwoTensor {
    pub fn from_json(v: &Value) -> Result<Self> {
        match v.get("ring").and_then(Value::as_str) {
            Some("Qt") => Ok(Self::Qt(two_from_json(v)?)),
            Some("Q") | None => Ok(Self::Q(two_from_json(v)?)),
            Some(other) => Err(Error::Parse(format!("unknown ring {other}"))),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Self::Q(t) => two_to_json(t),
            Self::Qt(t) => two_to_json(t),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Self::Q(t) => t.n(),
            Self::Qt(t) => t.n(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::wedge;

    #[test]
    fn round_trip_two_tensors() {
        let e = GlElement::<Rational>::elementary(3, 1, 2);
        let f = GlElement::elementary(3, 3, 2);
        let t = wedge(&e, &f).unwrap().scale(&Rational::new(2, 3));
        let v = two_to_json(&t);
        assert_eq!(v["ring"], "Q");
        assert_eq!(v["terms"][0]["a"], serde_json::json!([1, 2]));
        assert_eq!(v["terms"][0]["c"], "1/3");
        assert_eq!(two_from_json::<Rational>(&v).unwrap(), t);
        let lifted = t.lift().scale_by(&LaurentPoly::t_pow(-2));
        let back = AnyTwoTensor::from_json(&two_to_json(&lifted)).unwrap();
        assert_eq!(back, AnyTwoTensor::Qt(lifted));
        assert!(two_from_json::<LaurentPoly>(&v).is_err());
    }

    #[test]
    fn round_trip_three_and_elements() {
        let a = GlElement::<Rational>::h(4, 2);
        let b = GlElement::elementary(4, 1, 4);
        let t = ThreeTensor::tensor3(&a, &b, &a);
        assert_eq!(three_from_json::<Rational>(&three_to_json(&t)).unwrap(), t);
        assert_eq!(element_from_json::<Rational>(&element_to_json(&a)).unwrap(), a);
    }

    #[test]
    fn rejects_out_of_range_indices() {
        let v = serde_json::json!({"v": 1, "n": 2, "ring": "Q", "terms": [{"a": [1, 3], "b": [1, 1], "c": "1"}]});
        assert!(two_from_json::<Rational>(&v).is_err());
    }
}
