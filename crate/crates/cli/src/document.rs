//! The JSON algebra and representation file formats.

use std::fmt;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};
use serde_json::Value;

use solvlie::{Field, FieldSpec, LieAlgebra, Matrix, Representation};

/// A scalar exactly as written: a string literal or a JSON integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Literal {
    Text(String),
    Int(i64),
}

impl Literal {
    pub fn as_text(&self) -> String {
        match self {
            Literal::Text(s) => s.clone(),
            Literal::Int(v) => v.to_string(),
        }
    }
}

impl Serialize for Literal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Literal::Text(t) => s.serialize_str(t),
            Literal::Int(v) => s.serialize_i64(*v),
        }
    }
}

impl<'de> Deserialize<'de> for Literal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Literal;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an exact scalar: a string such as \"-3/4\" or an integer")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Literal, E> {
                Ok(Literal::Text(v.to_string()))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Literal, E> {
                Ok(Literal::Int(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Literal, E> {
                i64::try_from(v)
                    .map(Literal::Int)
                    .map_err(|_| E::custom("integer literal too large; write it as a string"))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Literal, E> {
                Err(E::custom(format!(
                    "floating-point literal {v} is not exact; write a string such as \"1/2\""
                )))
            }
        }
        d.deserialize_any(V)
    }
}

/// `"Q"` or `{"p": prime}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldDescriptor(pub FieldSpec);

impl Serialize for FieldDescriptor {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0 {
            FieldSpec::Rationals => s.serialize_str("Q"),
            FieldSpec::Prime(p) => serde_json::json!({ "p": p }).serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for FieldDescriptor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        match &v {
            Value::String(s) if s == "Q" || s == "q" => Ok(FieldDescriptor(FieldSpec::Rationals)),
            Value::Object(m) if m.len() == 1 => {
                let p = m
                    .get("p")
                    .and_then(Value::as_u64)
                    .ok_or_else(|| de::Error::custom("field object must be {\"p\": <prime>}"))?;
                if !solvlie::field::is_prime(p) {
                    return Err(de::Error::custom(format!("{p} is not prime")));
                }
                Ok(FieldDescriptor(FieldSpec::Prime(p)))
            }
            _ => Err(de::Error::custom("field must be \"Q\" or {\"p\": <prime>}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Bracket {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<(usize, Literal)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub field: FieldDescriptor,
    pub dim: usize,
    pub brackets: Vec<Bracket>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationDocument {
    pub field: FieldDescriptor,
    pub module_dim: usize,
    /// One matrix per basis element of the acting algebra, as rows.
    pub matrices: Vec<Vec<Vec<Literal>>>,
}

/// Parses JSON text; errors carry the line and column.
pub fn parse_json<'a, D: Deserialize<'a>>(text: &'a str, what: &str) -> Result<D, String> {
    serde_json::from_str(text).map_err(|e| format!("{what}: line {} column {}: {e}", e.line(), e.column()))
}

impl AlgebraDocument {
    pub fn parse(text: &str) -> Result<Self, String> {
        parse_json(text, "algebra document")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    /// Builds the algebra over `T`, reporting every problem with its location.
    pub fn build<T: Field>(&self) -> Result<LieAlgebra<T>, Vec<String>> {
        let n = self.dim;
        let mut errors = Vec::new();
        let mut tensor = vec![vec![vec![T::zero(); n]; n]; n];
        for (b, br) in self.brackets.iter().enumerate() {
            let at = format!("brackets[{b}]");
            if br.i >= n || br.j >= n {
                errors.push(format!("{at}: index ({}, {}) out of range for dim {n}", br.i, br.j));
                continue;
            }
            if br.i >= br.j {
                errors.push(format!(
                    "{at}: antisymmetry: entry ({}, {}) must have i < j; [b_j, b_i] = -[b_i, b_j] is implied",
                    br.i, br.j
                ));
                continue;
            }
            for (t, (k, lit)) in br.terms.iter().enumerate() {
                if *k >= n {
                    errors.push(format!("{at}.terms[{t}]: index {k} out of range for dim {n}"));
                    continue;
                }
                match T::parse_literal(&lit.as_text()) {
                    Ok(x) => {
                        tensor[br.i][br.j][*k] = tensor[br.i][br.j][*k].clone() + x.clone();
                        tensor[br.j][br.i][*k] = tensor[br.j][br.i][*k].clone() - x;
                    }
                    Err(e) => errors.push(format!("{at}.terms[{t}]: {e}")),
                }
            }
        }
        if !errors.is_empty() {
            return Err(errors);
        }
        LieAlgebra::validate(&tensor).map_err(|es| es.into_iter().map(|e| e.to_string()).collect())
    }

    pub fn from_algebra<T: Field>(l: &LieAlgebra<T>, name: Option<String>, source: Option<String>) -> Self {
        let brackets = l
            .nonzero_brackets()
            .into_iter()
            .filter(|(i, j, _)| i < j)
            .map(|(i, j, v)| Bracket {
                i,
                j,
                terms: v
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(k, x)| (k, Literal::Text(x.to_literal())))
                    .collect(),
            })
            .collect();
        AlgebraDocument {
            field: FieldDescriptor(T::spec()),
            dim: l.dim(),
            brackets,
            name,
            source,
        }
    }
}

impl RepresentationDocument {
    pub fn parse(text: &str) -> Result<Self, String> {
        parse_json(text, "representation document")
    }

    pub fn build<T: Field>(&self) -> Result<Representation<T>, Vec<String>> {
        let m = self.module_dim;
        let mut errors = Vec::new();
        let mut mats = Vec::new();
        for (a, rows) in self.matrices.iter().enumerate() {
            if rows.len() != m || rows.iter().any(|r| r.len() != m) {
                errors.push(format!("matrices[{a}]: expected a {m}x{m} matrix"));
                continue;
            }
            let mut x = Matrix::zeros(m, m);
            for (r, row) in rows.iter().enumerate() {
                for (c, lit) in row.iter().enumerate() {
                    match T::parse_literal(&lit.as_text()) {
                        Ok(v) => x[(r, c)] = v,
                        Err(e) => errors.push(format!("matrices[{a}][{r}][{c}]: {e}")),
                    }
                }
            }
            mats.push(x);
        }
        if !errors.is_empty() {
            return Err(errors);
        }
        Representation::new(m, mats).map_err(|e| vec![e.to_string()])
    }

    pub fn from_representation<T: Field>(rho: &Representation<T>) -> Self {
        RepresentationDocument {
            field: FieldDescriptor(T::spec()),
            module_dim: rho.module_dim,
            matrices: rho
                .matrices
                .iter()
                .map(|x| {
                    (0..x.rows())
                        .map(|r| x.row(r).iter().map(|v| Literal::Text(v.to_literal())).collect())
                        .collect()
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use solvlie::Rational;

    #[test]
    fn floats_are_rejected_with_position() {
        let text = r#"{"field": "Q", "dim": 2, "brackets": [{"i": 0, "j": 1, "terms": [[1, 0.5]]}]}"#;
        let e = AlgebraDocument::parse(text).unwrap_err();
        assert!(e.contains("line 1") && e.contains("floating-point"), "{e}");
    }

    #[test]
    fn diagonal_entries_are_antisymmetry_errors() {
        let text = r#"{"field": "Q", "dim": 2, "brackets": [{"i": 0, "j": 0, "terms": [[1, "1"]]}]}"#;
        let doc = AlgebraDocument::parse(text).unwrap();
        let e = doc.build::<Rational>().unwrap_err();
        assert!(e[0].contains("antisymmetry"));
    }
}
