//! Job description shared by the flag parser and `--json-job` files.

use std::path::Path;

use serde::Deserialize;

use orbitclass::kclass::Rank2Config;
use orbitclass::matroid::{Matroid, RationalMatrix};

use crate::CliError;

/// `{"subcommand": "...", "input": {...}, "options": {...}}`.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub subcommand: String,
    #[serde(default)]
    pub input: Option<InputSpec>,
    #[serde(default)]
    pub options: JobOptions,
}

/// Exactly one input object.
#[derive(Clone, Debug, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum InputSpec {
    Uniform([usize; 2]),
    /// Rank-2 parallelism partition, optionally padded with zero columns.
    Mu {
        parts: Vec<u32>,
        #[serde(default)]
        zeros: usize,
    },
    Matrix(RationalMatrix),
    Matroid(Matroid),
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobOptions {
    pub beta: Option<Vec<u32>>,
    pub k: Option<usize>,
    pub seed: Option<u64>,
    pub cap_steps: Option<usize>,
    #[serde(default)]
    pub as_printed: bool,
    /// `ideal`: iprime | idoubleprime | minors.
    pub kind: Option<String>,
    /// `ideal --kind minors`: minor size.
    pub size: Option<usize>,
    /// `matroid`: chain of subsets, 1-indexed.
    pub flag: Option<Vec<Vec<usize>>>,
    /// `verify`: fast | full.
    pub level: Option<String>,
    /// `member`.
    pub v: Option<RationalMatrix>,
    pub w: Option<RationalMatrix>,
}

impl JobSpec {
    pub fn from_file(path: &Path) -> Result<Self, CliError> {
        let text = read(path)?;
        Ok(serde_json::from_str(&text)?)
    }

    pub fn input(&self) -> Result<&InputSpec, CliError> {
        self.input
            .as_ref()
            .ok_or_else(|| CliError::Usage(format!("`{}` needs an input object", self.subcommand)))
    }
}

pub fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_matrix(path: &Path) -> Result<RationalMatrix, CliError> {
    Ok(serde_json::from_str(&read(path)?)?)
}

pub fn read_matroid(path: &Path) -> Result<Matroid, CliError> {
    Ok(serde_json::from_str(&read(path)?)?)
}

impl InputSpec {
    pub fn arity(&self) -> (usize, usize) {
        match self {
            InputSpec::Uniform([r, n]) => (*r, *n),
            InputSpec::Mu { parts, zeros } => (2, parts.iter().sum::<u32>() as usize + zeros),
            InputSpec::Matrix(v) => (v.rows(), v.cols()),
            InputSpec::Matroid(m) => (m.rank(), m.n()),
        }
    }

    fn assignment(parts: &[u32], zeros: usize) -> Vec<Option<usize>> {
        let mut out: Vec<Option<usize>> = parts
            .iter()
            .enumerate()
            .flat_map(|(c, &m)| std::iter::repeat(Some(c)).take(m as usize))
            .collect();
        out.extend(std::iter::repeat(None).take(zeros));
        out
    }

    pub fn matroid(&self) -> Result<Matroid, CliError> {
        Ok(match self {
            InputSpec::Uniform([r, n]) => {
                check_uniform(*r, *n)?;
                Matroid::uniform(*r, *n)
            }
            InputSpec::Mu { parts, zeros } => {
                Rank2Config::new(&Self::assignment(parts, *zeros))?.matroid()
            }
            InputSpec::Matrix(v) => Matroid::from_matrix(v)?,
            InputSpec::Matroid(m) => m.clone(),
        })
    }

    /// A matrix with the input's matroid; matroid inputs have none.
    pub fn realization(&self) -> Result<RationalMatrix, CliError> {
        match self {
            InputSpec::Uniform([r, n]) => {
                check_uniform(*r, *n)?;
                let rows: Vec<Vec<i64>> = (0..*r)
                    .map(|i| (0..*n).map(|j| (j as i64 + 1).pow(i as u32)).collect())
                    .collect();
                Ok(RationalMatrix::from_i64(&rows))
            }
            InputSpec::Mu { parts, zeros } => {
                // Member k of class c is k·(1, c).
                let assignment = Self::assignment(parts, *zeros);
                let mut seen = vec![0i64; parts.len()];
                let (mut top, mut bottom) = (Vec::new(), Vec::new());
                for a in assignment {
                    match a {
                        Some(c) => {
                            seen[c] += 1;
                            top.push(seen[c]);
                            bottom.push(seen[c] * c as i64);
                        }
                        None => {
                            top.push(0);
                            bottom.push(0);
                        }
                    }
                }
                Ok(RationalMatrix::from_i64(&[top, bottom]))
            }
            InputSpec::Matrix(v) => Ok(v.clone()),
            InputSpec::Matroid(_) => Err(CliError::Usage(
                "this subcommand needs a matrix; matroid input has no realization".into(),
            )),
        }
    }

    /// The rank-2 configuration when the input has two rows and rank 2.
    pub fn rank2(&self) -> Result<Option<Rank2Config>, CliError> {
        Ok(match self {
            InputSpec::Uniform([2, n]) => {
                check_uniform(2, *n)?;
                Some(Rank2Config::new(&(0..*n).map(Some).collect::<Vec<_>>())?)
            }
            InputSpec::Uniform(_) => None,
            InputSpec::Mu { parts, zeros } => {
                Some(Rank2Config::new(&Self::assignment(parts, *zeros))?)
            }
            InputSpec::Matrix(v) if v.rows() == 2 && v.rank() == 2 => {
                Some(Rank2Config::from_matrix(v)?)
            }
            InputSpec::Matrix(_) => None,
            InputSpec::Matroid(m) if m.rank() == 2 => Some(Rank2Config::from_matroid(m)?),
            InputSpec::Matroid(_) => None,
        })
    }
}

fn check_uniform(r: usize, n: usize) -> Result<(), CliError> {
    if r > n || n == 0 {
        return Err(CliError::Usage(format!(
            "--uniform needs 0 <= R <= N and N >= 1, got {r} {n}"
        )));
    }
    Ok(())
}
