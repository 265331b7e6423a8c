//! JSON module specifications read and written by the command-line tool.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::ideal::IdealData;
use crate::matrix::PolyMatrix;
use crate::module::PModule;
use crate::monomial::MonomialOrder;
use crate::parse::parse_poly;
use crate::poly::Poly;
use crate::ring::{Context, PolyRing, Settings};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub char: Option<u64>,
    pub vars: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
}

/// Either `presentation` (rows = generators, columns = relations) or `ideal`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub ring: RingSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub presentation: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ambient_rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

/// Parsed specification: the ring, the module, and the ideal when one was given.
pub struct Loaded {
    pub spec: ModuleSpec,
    pub ring: PolyRing,
    pub module: PModule,
    pub ideal: Option<IdealData>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse { line: e.line(), col: e.column(), msg: format!("schema: {e}") }
}

fn entry_error(e: Error, at: &str) -> Error {
    match e {
        Error::Parse { line, col, msg } => Error::Parse { line, col, msg: format!("{at}: {msg}") },
        Error::Division { line, col } => {
            Error::Parse { line, col, msg: format!("{at}: division is not allowed") }
        }
        Error::UnknownVariable(v) => Error::Parse { line: 1, col: 1, msg: format!("{at}: unknown variable `{v}`") },
        other => other,
    }
}

impl ModuleSpec {
    pub fn from_json(text: &str) -> Result<ModuleSpec> {
        serde_json::from_str(text).map_err(json_error)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).unwrap()
    }

    /// Builds the ring; `default_char` applies when the file has no `char`.
    pub fn build_ring(&self, default_char: u64, settings: Settings) -> Result<PolyRing> {
        let ch = self.ring.char.unwrap_or(default_char);
        let field = FieldSpec::new(ch)?;
        let order = match &self.ring.order {
            None => MonomialOrder::Grevlex,
            Some(o) => MonomialOrder::parse(o)
                .ok_or_else(|| Error::InvalidInput(format!("unknown monomial order `{o}`")))?,
        };
        let n = self.ring.vars.len();
        if n == 0 {
            return Err(Error::InvalidInput("ring has no variables".into()));
        }
        PolyRing::build(field, self.ring.vars.clone(), order, vec![1; n], Context::new(settings))
    }

    pub fn load(&self, default_char: u64, settings: Settings) -> Result<Loaded> {
        let ring = self.build_ring(default_char, settings)?;
        let (module, ideal) = match (&self.presentation, &self.ideal) {
            (Some(_), Some(_)) => {
                return Err(Error::InvalidInput("give either `presentation` or `ideal`, not both".into()))
            }
            (None, None) => return Err(Error::InvalidInput("missing `presentation` or `ideal`".into())),
            (None, Some(gens)) => {
                let polys = gens
                    .iter()
                    .enumerate()
                    .map(|(i, g)| parse_poly(&ring, g).map_err(|e| entry_error(e, &format!("ideal[{i}]"))))
                    .collect::<Result<Vec<Poly>>>()?;
                if polys.iter().any(|p| !p.is_homogeneous()) {
                    return Err(Error::NotGraded("ideal generators must be homogeneous".into()));
                }
                let i = IdealData::new(&ring, polys);
                (PModule::from_ideal(&i)?, Some(i))
            }
            (Some(rows), None) => (self.presentation_module(&ring, rows)?, None),
        };
        Ok(Loaded { spec: self.clone(), ring, module, ideal })
    }

    fn presentation_module(&self, ring: &PolyRing, rows: &[Vec<String>]) -> Result<PModule> {
        let n = match (rows.len(), self.ambient_rank) {
            (0, Some(n)) => n,
            (0, None) => return Err(Error::InvalidInput("empty presentation needs `ambient_rank`".into())),
            (r, Some(n)) if r != n => {
                return Err(Error::InvalidInput(format!("presentation has {r} rows but ambient_rank is {n}")))
            }
            (r, _) => r,
        };
        let width = rows.first().map(|r| r.len()).unwrap_or(0);
        if let Some(i) = rows.iter().position(|r| r.len() != width) {
            return Err(Error::InvalidInput(format!("ragged presentation: row {i} has {} entries, expected {width}", rows[i].len())));
        }
        if let Some(d) = &self.degrees {
            if d.len() != n {
                return Err(Error::InvalidInput(format!("{} degrees given for {n} generators", d.len())));
            }
        }
        let mut grid = Vec::with_capacity(n);
        for (i, row) in rows.iter().enumerate() {
            let mut out = Vec::with_capacity(width);
            for (j, s) in row.iter().enumerate() {
                out.push(parse_poly(ring, s).map_err(|e| entry_error(e, &format!("presentation[{i}][{j}]")))?);
            }
            grid.push(out);
        }
        if width == 0 {
            return Ok(PModule::free(ring, self.degrees.clone().unwrap_or_else(|| vec![0; n])));
        }
        let m = PolyMatrix::from_rows(ring, grid, vec![0; n])?;
        match &self.degrees {
            None => PModule::from_matrix(m),
            Some(d) => {
                let mut m = m;
                m.set_row_degs(d.clone());
                m.infer_col_degs();
                if !m.is_graded() {
                    return Err(Error::NotGraded("presentation is not homogeneous for the given degrees".into()));
                }
                Ok(PModule::new(m))
            }
        }
    }

    /// Specification of a presented module (generator degrees always recorded).
    pub fn from_module(m: &PModule, label: Option<String>) -> ModuleSpec {
        let ring = m.ring();
        let rel = m.relations();
        let rows: Vec<Vec<String>> =
            (0..rel.rows()).map(|i| rel.row(i).iter().map(|p| p.to_string()).collect()).collect();
        ModuleSpec {
            ring: RingSpec {
                char: Some(ring.field().characteristic()),
                vars: ring.vars().to_vec(),
                order: (ring.order() != MonomialOrder::Grevlex).then(|| ring.order().name()),
            },
            presentation: Some(if rel.cols() == 0 { vec![] } else { rows }),
            ideal: None,
            ambient_rank: Some(m.ambient_rank()),
            degrees: Some(m.gen_degrees().to_vec()),
            label,
        }
    }
}

/// Reads a specification from JSON text.
pub fn parse_module_spec(text: &str, default_char: u64, settings: Settings) -> Result<Loaded> {
    ModuleSpec::from_json(text)?.load(default_char, settings)
}
