//! Plain-text instance files.
//!
//! ```text
//! minkp <n> <demand>        or   maxkp <n> <capacity>
//! <weight> <size>           one line per item, n lines
//! ```
//!
//! All tokens are base-10 integers separated by whitespace, lines end in LF.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::instance::Structure;
use crate::knapsack::{max_knapsack, min_knapsack, MaxKnapsack, MinKnapsack};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProblemKind {
    MinKp,
    MaxKp,
}

impl ProblemKind {
    pub fn tag(self) -> &'static str {
        match self {
            ProblemKind::MinKp => "minkp",
            ProblemKind::MaxKp => "maxkp",
        }
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for ProblemKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "minkp" => Ok(ProblemKind::MinKp),
            "maxkp" => Ok(ProblemKind::MaxKp),
            other => Err(Error::Domain(format!(
                "unknown problem kind `{other}`, expected minkp or maxkp"
            ))),
        }
    }
}

/// An instance of either knapsack variant, as read from a file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyInstance {
    MinKp(MinKnapsack),
    MaxKp(MaxKnapsack),
}

impl AnyInstance {
    pub fn kind(&self) -> ProblemKind {
        match self {
            AnyInstance::MinKp(_) => ProblemKind::MinKp,
            AnyInstance::MaxKp(_) => ProblemKind::MaxKp,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            AnyInstance::MinKp(i) => i.len(),
            AnyInstance::MaxKp(i) => i.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn total_weight(&self) -> u128 {
        match self {
            AnyInstance::MinKp(i) => i.total_weight(),
            AnyInstance::MaxKp(i) => i.total_weight(),
        }
    }

    pub fn structure_bytes(&self) -> usize {
        match self {
            AnyInstance::MinKp(i) => i.structure().encoded_len(),
            AnyInstance::MaxKp(i) => i.structure().encoded_len(),
        }
    }
}

fn parse_u64(token: &str, line: usize, what: &str) -> Result<u64> {
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("{what} `{token}` is not a nonnegative base-10 integer"),
    })
}

pub fn parse_instance(text: &str) -> Result<AnyInstance> {
    let mut lines = text.split('\n').enumerate().map(|(i, l)| (i + 1, l));

    let (line_no, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "empty input".into(),
    })?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let [tag, n, rhs] = tokens[..] else {
        return Err(Error::Parse {
            line: line_no,
            message: "header must be `minkp <n> <demand>` or `maxkp <n> <capacity>`".into(),
        });
    };
    let kind: ProblemKind = tag.parse().map_err(|e: Error| Error::Parse {
        line: line_no,
        message: e.to_string(),
    })?;
    let n = parse_u64(n, line_no, "item count")? as usize;
    let rhs = parse_u64(rhs, line_no, "right-hand side")?;

    let mut items = Vec::with_capacity(n);
    for _ in 0..n {
        let Some((line_no, line)) = lines.next() else {
            return Err(Error::Parse {
                line: line_no + items.len() + 1,
                message: format!("expected {n} item lines, found {}", items.len()),
            });
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let [w, a] = tokens[..] else {
            return Err(Error::Parse {
                line: line_no,
                message: "item line must be `<weight> <size>`".into(),
            });
        };
        let w = parse_u64(w, line_no, "weight")?;
        let a = parse_u64(a, line_no, "size")?;
        if w == 0 || a == 0 {
            return Err(Error::Validation(format!(
                "line {line_no}: weight and size must be positive integers"
            )));
        }
        items.push((w, a));
    }
    if let Some((line_no, _)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return Err(Error::Parse {
            line: line_no,
            message: format!("unexpected content after {n} item lines"),
        });
    }

    Ok(match kind {
        ProblemKind::MinKp => AnyInstance::MinKp(min_knapsack(&items, rhs)?),
        ProblemKind::MaxKp => AnyInstance::MaxKp(max_knapsack(&items, rhs)?),
    })
}

pub fn serialize_instance(instance: &AnyInstance) -> String {
    let (weights, sizes, rhs) = match instance {
        AnyInstance::MinKp(i) => (i.weights(), &i.structure().sizes, i.structure().demand),
        AnyInstance::MaxKp(i) => (i.weights(), &i.structure().sizes, i.structure().capacity),
    };
    let mut out = format!("{} {} {}\n", instance.kind(), weights.len(), rhs);
    for (w, a) in weights.iter().zip(sizes) {
        out.push_str(&format!("{w} {a}\n"));
    }
    out
}
