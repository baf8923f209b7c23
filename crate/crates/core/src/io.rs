//! Line-oriented text formats for algebras and bimodules.
//!
//! ```text
//! field: 2
//! name: D
//! dim: 2
//! unit: 1 0
//! mul 0 0: 1 0
//! mul 0 1: 0 1
//! mul 1 0: 0 1
//! mul 1 1: 0 0
//! ```
//!
//! Bimodules use `field`, `name`, `algebra`, `dim` and then one
//! `left <i>:` / `right <i>:` header per basis element of the algebra, each
//! followed by `dim` rows of `dim` scalars. `#` starts a comment.
//!
//! Scalars are read strictly when the file's field is the one requested,
//! and through the loose rational syntax otherwise.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError};
use crate::bimodule::{Bimodule, BimoduleError};
use crate::field::{Field, FieldError, FieldSpec};
use crate::linalg::Matrix;
use crate::trivext::TrivialExtension;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: {source}")]
    Field { line: usize, source: FieldError },
    #[error("line {line}: expected {expected} entries, found {found}")]
    DimensionMismatch { line: usize, expected: usize, found: usize },
    #[error("line {line}: duplicate entry `mul {i} {j}`")]
    DuplicateMul { line: usize, i: usize, j: usize },
    #[error("missing entry `mul {i} {j}`")]
    MissingMul { i: usize, j: usize },
    #[error("line {line}: duplicate key `{key}`")]
    DuplicateKey { line: usize, key: String },
    #[error("missing `{0}:` line")]
    MissingKey(&'static str),
    #[error("line {line}: index {index} out of range for dimension {dim}")]
    IndexOutOfRange { line: usize, index: usize, dim: usize },
    #[error("missing `{side} {index}:` block")]
    MissingBlock { side: &'static str, index: usize },
    #[error("line {line}: duplicate block `{side} {index}:`")]
    DuplicateBlock { line: usize, side: &'static str, index: usize },
    #[error("line {line}: block `{side} {index}:` has {found} rows, expected {expected}")]
    ShortBlock {
        line: usize,
        side: &'static str,
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("bimodule is declared over `{declared}`, but the loaded algebra is `{loaded}`")]
    AlgebraName { declared: String, loaded: String },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Bimodule(#[from] BimoduleError),
}

/// Non-blank lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, message: message.into() }
}

/// The `field:` declaration of a presentation file.
pub fn read_field_spec(text: &str) -> Result<FieldSpec, ParseError> {
    for (line, content) in content_lines(text) {
        if let Some((key, value)) = content.split_once(':') {
            if key.trim() == "field" {
                return value.trim().parse().map_err(|source| ParseError::Field { line, source });
            }
        }
    }
    Err(ParseError::MissingKey("field"))
}

struct Scalars<'f, F: Field> {
    field: &'f F,
    strict: bool,
}

impl<F: Field> Scalars<'_, F> {
    fn row(&self, line: usize, text: &str, expected: usize) -> Result<Vec<F::Elem>, ParseError> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.len() != expected {
            return Err(ParseError::DimensionMismatch {
                line,
                expected,
                found: tokens.len(),
            });
        }
        tokens
            .into_iter()
            .map(|t| {
                let parsed = if self.strict { self.field.parse(t) } else { self.field.parse_lenient(t) };
                parsed.map_err(|source| ParseError::Field { line, source })
            })
            .collect()
    }
}

fn parse_index(line: usize, token: Option<&str>, dim: usize) -> Result<usize, ParseError> {
    let token = token.ok_or_else(|| syntax(line, "missing index"))?;
    let index: usize = token.parse().map_err(|_| syntax(line, format!("`{token}` is not an index")))?;
    if index >= dim {
        return Err(ParseError::IndexOutOfRange { line, index, dim });
    }
    Ok(index)
}

fn parse_dim(line: usize, value: &str) -> Result<usize, ParseError> {
    value.parse().map_err(|_| syntax(line, format!("`{value}` is not a dimension")))
}

#[derive(Default)]
struct Header<'t> {
    values: BTreeMap<&'static str, (usize, &'t str)>,
}

impl<'t> Header<'t> {
    fn set(&mut self, line: usize, key: &'static str, value: &'t str) -> Result<(), ParseError> {
        if self.values.insert(key, (line, value)).is_some() {
            return Err(ParseError::DuplicateKey { line, key: key.to_string() });
        }
        Ok(())
    }

    fn get(&self, key: &'static str) -> Result<(usize, &'t str), ParseError> {
        self.values.get(key).copied().ok_or(ParseError::MissingKey(key))
    }
}

fn header_key(key: &str, allowed: &[&'static str]) -> Option<&'static str> {
    allowed.iter().copied().find(|k| *k == key)
}

/// Parses an algebra presentation over `field`.
pub fn parse_algebra<F: Field>(text: &str, field: &F) -> Result<Algebra<F>, ParseError> {
    const KEYS: &[&str] = &["field", "name", "dim", "unit"];
    let mut header = Header::default();
    let mut entries: Vec<(usize, &str, &str)> = Vec::new();
    for (line, content) in content_lines(text) {
        let (key, value) = content.split_once(':').ok_or_else(|| syntax(line, "expected `key: value`"))?;
        let (key, value) = (key.trim(), value.trim());
        if let Some(k) = header_key(key, KEYS) {
            header.set(line, k, value)?;
        } else if key.split_whitespace().next() == Some("mul") {
            entries.push((line, key, value));
        } else {
            return Err(ParseError::UnknownKey { line, key: key.to_string() });
        }
    }
    let (fline, fvalue) = header.get("field")?;
    let declared: FieldSpec = fvalue.parse().map_err(|source| ParseError::Field { line: fline, source })?;
    let scalars = Scalars {
        field,
        strict: declared == field.spec(),
    };
    let name = header.get("name")?.1.to_string();
    let (dline, dvalue) = header.get("dim")?;
    let n = parse_dim(dline, dvalue)?;
    let (uline, uvalue) = header.get("unit")?;
    let unit = scalars.row(uline, uvalue, n)?;

    let mut table: Vec<Option<Vec<F::Elem>>> = vec![None; n * n];
    for (line, key, value) in entries {
        let mut parts = key.split_whitespace().skip(1);
        let i = parse_index(line, parts.next(), n)?;
        let j = parse_index(line, parts.next(), n)?;
        if parts.next().is_some() {
            return Err(syntax(line, "expected `mul <i> <j>:`"));
        }
        if table[i * n + j].is_some() {
            return Err(ParseError::DuplicateMul { line, i, j });
        }
        table[i * n + j] = Some(scalars.row(line, value, n)?);
    }
    let mut mul = Vec::with_capacity(n * n * n);
    for (idx, row) in table.into_iter().enumerate() {
        mul.extend(row.ok_or(ParseError::MissingMul { i: idx / n, j: idx % n })?);
    }
    Ok(Algebra::new(field, name, n, unit, mul)?)
}

/// Parses a bimodule presentation over an already loaded algebra.
pub fn parse_bimodule<F: Field>(text: &str, algebra: Arc<Algebra<F>>) -> Result<Bimodule<F>, ParseError> {
    const KEYS: &[&str] = &["field", "name", "algebra", "dim"];
    let field = algebra.field().clone();
    let n = algebra.dim();
    let mut header = Header::default();
    let mut blocks: Vec<(usize, &'static str, &str, Vec<(usize, &str)>)> = Vec::new();
    for (line, content) in content_lines(text) {
        if let Some((key, value)) = content.split_once(':') {
            let (key, value) = (key.trim(), value.trim());
            let first = key.split_whitespace().next().unwrap_or("");
            if let Some(k) = header_key(key, KEYS) {
                header.set(line, k, value)?;
                continue;
            }
            let side = match first {
                "left" => "left",
                "right" => "right",
                _ => return Err(ParseError::UnknownKey { line, key: key.to_string() }),
            };
            if !value.is_empty() {
                return Err(syntax(line, "block header must end with `:`"));
            }
            blocks.push((line, side, key, Vec::new()));
        } else {
            match blocks.last_mut() {
                Some(block) => block.3.push((line, content)),
                None => return Err(syntax(line, "matrix row outside a `left`/`right` block")),
            }
        }
    }
    let (fline, fvalue) = header.get("field")?;
    let declared: FieldSpec = fvalue.parse().map_err(|source| ParseError::Field { line: fline, source })?;
    let scalars = Scalars {
        field: &field,
        strict: declared == field.spec(),
    };
    let name = header.get("name")?.1.to_string();
    let declared_algebra = header.get("algebra")?.1;
    if declared_algebra != algebra.name() {
        return Err(ParseError::AlgebraName {
            declared: declared_algebra.to_string(),
            loaded: algebra.name().to_string(),
        });
    }
    let (dline, dvalue) = header.get("dim")?;
    let m = parse_dim(dline, dvalue)?;

    let mut left: Vec<Option<Matrix<F>>> = vec![None; n];
    let mut right: Vec<Option<Matrix<F>>> = vec![None; n];
    for (line, side, key, rows) in blocks {
        let mut parts = key.split_whitespace().skip(1);
        let index = parse_index(line, parts.next(), n)?;
        if parts.next().is_some() {
            return Err(syntax(line, format!("expected `{side} <i>:`")));
        }
        if rows.len() != m {
            return Err(ParseError::ShortBlock {
                line,
                side,
                index,
                expected: m,
                found: rows.len(),
            });
        }
        let parsed = rows.iter().map(|&(l, r)| scalars.row(l, r, m)).collect::<Result<Vec<_>, _>>()?;
        let matrix = Matrix::from_rows(&field, m, parsed).expect("rows checked");
        let slot = if side == "left" { &mut left[index] } else { &mut right[index] };
        if slot.is_some() {
            return Err(ParseError::DuplicateBlock { line, side, index });
        }
        *slot = Some(matrix);
    }
    let collect = |v: Vec<Option<Matrix<F>>>, side: &'static str| {
        v.into_iter()
            .enumerate()
            .map(|(index, x)| x.ok_or(ParseError::MissingBlock { side, index }))
            .collect::<Result<Vec<_>, _>>()
    };
    let left = collect(left, "left")?;
    let right = collect(right, "right")?;
    Ok(Bimodule::new(algebra, name, m, left, right)?)
}

fn scalar_line<F: Field>(field: &F, v: &[F::Elem]) -> String {
    v.iter().map(|x| field.format(x)).collect::<Vec<_>>().join(" ")
}

pub fn export_algebra<F: Field>(a: &Algebra<F>) -> String {
    let f = a.field();
    let n = a.dim();
    let mut out = String::new();
    let _ = writeln!(out, "field: {}", f.spec());
    let _ = writeln!(out, "name: {}", a.name());
    let _ = writeln!(out, "dim: {n}");
    let _ = writeln!(out, "unit: {}", scalar_line(f, a.unit()));
    for i in 0..n {
        for j in 0..n {
            let _ = writeln!(out, "mul {i} {j}: {}", scalar_line(f, a.basis_product(i, j)));
        }
    }
    out
}

pub fn export_bimodule<F: Field>(m: &Bimodule<F>) -> String {
    let f = m.field();
    let mut out = String::new();
    let _ = writeln!(out, "field: {}", f.spec());
    let _ = writeln!(out, "name: {}", m.name());
    let _ = writeln!(out, "algebra: {}", m.algebra().name());
    let _ = writeln!(out, "dim: {}", m.dim());
    for (side, mats) in [("left", m.left_matrices()), ("right", m.right_matrices())] {
        for (i, mat) in mats.iter().enumerate() {
            let _ = writeln!(out, "{side} {i}:");
            for row in mat.row_vectors() {
                let _ = writeln!(out, "{}", scalar_line(f, row));
            }
        }
    }
    out
}

/// The total algebra of an extension, with its basis split as a comment.
pub fn export_extension<F: Field>(ext: &TrivialExtension<F>) -> String {
    let (n, m) = (ext.base_dim(), ext.module_dim());
    let mut out = String::new();
    let _ = writeln!(out, "# trivial extension {} by {}", ext.base().name(), ext.module().name());
    let _ = writeln!(out, "# basis 0..{n}: {}", ext.base().name());
    let _ = writeln!(out, "# basis {n}..{}: {}", n + m, ext.module().name());
    out.push_str(&export_algebra(ext.total()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::standard;

    const DUAL: &str = "field: 2\nname: D\ndim: 2\nunit: 1 0\nmul 0 0: 1 0\nmul 0 1: 0 1\nmul 1 0: 0 1\nmul 1 1: 0 0\n";

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    #[test]
    fn parses_dual_numbers() {
        let a = parse_algebra(DUAL, &f2()).unwrap();
        assert_eq!(a, standard::dual_numbers(&f2()));
        assert_eq!(read_field_spec(DUAL).unwrap(), FieldSpec::Prime(2));
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = format!("# dual numbers\n\n{}", DUAL.replace("unit: 1 0", "unit: 1 0   # identity"));
        assert!(parse_algebra(&text, &f2()).is_ok());
    }

    #[test]
    fn field_4_is_not_prime() {
        let text = DUAL.replace("field: 2", "field: 4");
        let err = read_field_spec(&text).unwrap_err();
        assert!(err.to_string().contains("4 is not prime"), "{err}");
        let err = parse_algebra(&text, &f2()).unwrap_err();
        assert!(err.to_string().contains("4 is not prime"), "{err}");
    }

    #[test]
    fn distinct_errors() {
        let missing = DUAL.replace("mul 1 1: 0 0\n", "");
        assert_eq!(parse_algebra(&missing, &f2()).unwrap_err(), ParseError::MissingMul { i: 1, j: 1 });
        assert!(parse_algebra(&missing, &f2()).unwrap_err().to_string().contains("mul 1 1"));

        let dup = format!("{DUAL}mul 0 1: 0 1\n");
        assert_eq!(parse_algebra(&dup, &f2()).unwrap_err(), ParseError::DuplicateMul { line: 9, i: 0, j: 1 });

        let no_unit = DUAL.replace("unit: 1 0\n", "");
        assert_eq!(parse_algebra(&no_unit, &f2()).unwrap_err(), ParseError::MissingKey("unit"));

        let short = DUAL.replace("mul 0 1: 0 1", "mul 0 1: 0 1 0");
        assert_eq!(
            parse_algebra(&short, &f2()).unwrap_err(),
            ParseError::DimensionMismatch {
                line: 6,
                expected: 2,
                found: 3
            }
        );

        let unknown = format!("{DUAL}colour: red\n");
        assert!(matches!(parse_algebra(&unknown, &f2()).unwrap_err(), ParseError::UnknownKey { line: 9, .. }));

        let kind = DUAL.replace("field: 2", "field: R");
        assert!(matches!(
            read_field_spec(&kind).unwrap_err(),
            ParseError::Field {
                source: FieldError::UnknownKind(_),
                ..
            }
        ));

        let bad_scalar = DUAL.replace("unit: 1 0", "unit: 1 2");
        assert!(matches!(parse_algebra(&bad_scalar, &f2()).unwrap_err(), ParseError::Field { line: 4, .. }));
    }

    #[test]
    fn validation_errors_pass_through() {
        let bad = DUAL.replace("mul 0 1: 0 1", "mul 0 1: 1 1");
        assert!(matches!(parse_algebra(&bad, &f2()).unwrap_err(), ParseError::Algebra(_)));
    }

    #[test]
    fn lenient_override() {
        let q = DUAL.replace("field: 2", "field: Q").replace("unit: 1 0", "unit: 3/3 0");
        // strict over Q rejects the unreduced fraction
        assert!(parse_algebra(&q, &Rationals).is_err());
        // read over F2 it is accepted loosely
        assert_eq!(parse_algebra(&q, &f2()).unwrap(), standard::dual_numbers(&f2()));
    }

    #[test]
    fn bimodule_round_trip() {
        let (s, n) = standard::example_sn(&f2());
        let text = export_bimodule(&n);
        let s2 = Arc::new(parse_algebra(&export_algebra(&s), &f2()).unwrap());
        assert_eq!(parse_bimodule(&text, s2).unwrap(), n);
    }

    #[test]
    fn bimodule_errors() {
        let (s, n) = standard::example_sn(&f2());
        let text = export_bimodule(&n);
        let wrong = text.replace("algebra: S", "algebra: T");
        assert!(matches!(parse_bimodule(&wrong, s.clone()).unwrap_err(), ParseError::AlgebraName { .. }));
        let missing = text.replace("right 2:\n0\n", "");
        assert_eq!(
            parse_bimodule(&missing, s.clone()).unwrap_err(),
            ParseError::MissingBlock { side: "right", index: 2 }
        );
        let broken = text.replace("left 2:\n1\n", "left 2:\n0\n");
        assert!(matches!(parse_bimodule(&broken, s).unwrap_err(), ParseError::Bimodule(_)));
    }

    #[test]
    fn extension_export_reparses() {
        let (s, n) = standard::example_sn(&f2());
        let ext = TrivialExtension::new(s, n).unwrap();
        let text = export_extension(&ext);
        assert!(text.starts_with("# trivial extension S by N\n# basis 0..3: S\n# basis 3..4: N\n"));
        assert_eq!(&parse_algebra(&text, &f2()).unwrap(), &**ext.total());
    }
}
