//! Plain-text scenario files.
//!
//! ```text
//! # comment
//! [environment]
//! alpha = 9.6
//! xi_los_db = 1
//! ```
//!
//! Every key in [`SCHEMA`] must appear exactly once; anything else is
//! rejected. The unit of each value is fixed by its key suffix.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use dsc_core::dual_interf::{InterferenceScenario, SearchGrid};
use dsc_core::{Environment, RadioConfig, TargetArea};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ScenarioError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: unknown section [{name}]")]
    UnknownSection { line: usize, name: String },
    #[error("line {line}: unknown key `{key}` in [{section}]")]
    UnknownKey {
        line: usize,
        section: String,
        key: String,
    },
    #[error("line {line}: `{key}` in [{section}] already set")]
    Duplicate {
        line: usize,
        section: String,
        key: String,
    },
    #[error("line {line}: cannot parse `{value}` for `{key}`")]
    BadValue {
        line: usize,
        key: String,
        value: String,
    },
    #[error("missing key `{key}` in [{section}]")]
    Missing { section: String, key: String },
    #[error("invalid scenario: {0}")]
    Invalid(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Number,
    List,
    Switch,
}

const SCHEMA: &[(&str, &[(&str, Kind)])] = &[
    (
        "environment",
        &[
            ("alpha", Kind::Number),
            ("beta", Kind::Number),
            ("xi_los_db", Kind::Number),
            ("xi_nlos_db", Kind::Number),
        ],
    ),
    (
        "radio",
        &[
            ("fc_hz", Kind::Number),
            ("pt_dbm", Kind::Number),
            ("noise_dbm", Kind::Number),
            ("gamma_th_db", Kind::Number),
            ("h_max_m", Kind::Number),
        ],
    ),
    ("area", &[("a_m", Kind::Number), ("b_m", Kind::Number)]),
    (
        "dscs",
        &[
            ("h1_m", Kind::Number),
            ("h2_m", Kind::Number),
            ("pt1_dbm", Kind::Number),
            ("pt2_dbm", Kind::Number),
        ],
    ),
    (
        "sweeps",
        &[
            ("r_c_list_m", Kind::List),
            ("altitude_min_m", Kind::Number),
            ("altitude_max_m", Kind::Number),
            ("altitude_step_m", Kind::Number),
            ("separation_min_m", Kind::Number),
            ("separation_max_m", Kind::Number),
            ("separation_step_m", Kind::Number),
            ("a_list_m", Kind::List),
        ],
    ),
    (
        "joint",
        &[
            ("separation_min_m", Kind::Number),
            ("separation_max_m", Kind::Number),
            ("separation_step_m", Kind::Number),
            ("h1_min_m", Kind::Number),
            ("h1_max_m", Kind::Number),
            ("h1_step_m", Kind::Number),
            ("h2_min_m", Kind::Number),
            ("h2_max_m", Kind::Number),
            ("h2_step_m", Kind::Number),
        ],
    ),
    (
        "flags",
        &[("interference", Kind::Switch), ("clip_width", Kind::Switch)],
    ),
];

#[derive(Debug, Clone, PartialEq)]
enum Value {
    Number(f64),
    List(Vec<f64>),
    Switch(bool),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DscPair {
    pub h1: f64,
    pub h2: f64,
    pub pt1: f64,
    pub pt2: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Sweeps {
    pub r_c_list: Vec<f64>,
    pub altitude: SearchGrid,
    pub separation: SearchGrid,
    pub a_list: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JointGrids {
    pub separation: SearchGrid,
    pub h1: SearchGrid,
    pub h2: SearchGrid,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Flags {
    pub interference: bool,
    pub clip_width: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub env: Environment,
    pub radio: RadioConfig,
    pub area: TargetArea,
    pub dscs: DscPair,
    pub sweeps: Sweeps,
    pub joint: JointGrids,
    pub flags: Flags,
}

/// The scenario shipped in `scenarios/default.scn`.
pub const DEFAULT_SCENARIO: &str = include_str!("../../../scenarios/default.scn");

fn kind_of(section: &str, key: &str) -> Option<Kind> {
    SCHEMA
        .iter()
        .find(|(s, _)| *s == section)
        .and_then(|(_, keys)| keys.iter().find(|(k, _)| *k == key))
        .map(|(_, kind)| *kind)
}

fn parse_value(kind: Kind, raw: &str, line: usize, key: &str) -> Result<Value, ScenarioError> {
    let bad = || ScenarioError::BadValue {
        line,
        key: key.to_string(),
        value: raw.to_string(),
    };
    let number = |s: &str| s.trim().parse::<f64>().ok().filter(|x| x.is_finite());
    match kind {
        Kind::Number => number(raw).map(Value::Number).ok_or_else(bad),
        Kind::List => {
            if raw.trim().is_empty() {
                return Ok(Value::List(Vec::new()));
            }
            raw.split(',')
                .map(|s| number(s).ok_or_else(bad))
                .collect::<Result<Vec<_>, _>>()
                .map(Value::List)
        }
        Kind::Switch => match raw.trim() {
            "on" => Ok(Value::Switch(true)),
            "off" => Ok(Value::Switch(false)),
            _ => Err(bad()),
        },
    }
}

struct Table(BTreeMap<(String, String), Value>);

impl Table {
    fn take(&mut self, section: &str, key: &str) -> Result<Value, ScenarioError> {
        self.0
            .remove(&(section.to_string(), key.to_string()))
            .ok_or_else(|| ScenarioError::Missing {
                section: section.to_string(),
                key: key.to_string(),
            })
    }

    fn number(&mut self, section: &str, key: &str) -> Result<f64, ScenarioError> {
        match self.take(section, key)? {
            Value::Number(x) => Ok(x),
            _ => unreachable!("schema kind mismatch for {section}.{key}"),
        }
    }

    fn list(&mut self, section: &str, key: &str) -> Result<Vec<f64>, ScenarioError> {
        match self.take(section, key)? {
            Value::List(x) => Ok(x),
            _ => unreachable!("schema kind mismatch for {section}.{key}"),
        }
    }

    fn switch(&mut self, section: &str, key: &str) -> Result<bool, ScenarioError> {
        match self.take(section, key)? {
            Value::Switch(x) => Ok(x),
            _ => unreachable!("schema kind mismatch for {section}.{key}"),
        }
    }

    fn grid(&mut self, section: &str, prefix: &str) -> Result<SearchGrid, ScenarioError> {
        let min = self.number(section, &format!("{prefix}_min_m"))?;
        let max = self.number(section, &format!("{prefix}_max_m"))?;
        let step = self.number(section, &format!("{prefix}_step_m"))?;
        SearchGrid::new(min, max, step)
            .map_err(|e| ScenarioError::Invalid(format!("[{section}] {prefix}: {e}")))
    }
}

fn invalid(e: dsc_core::Error) -> ScenarioError {
    ScenarioError::Invalid(e.to_string())
}

impl Scenario {
    pub fn parse(text: &str) -> Result<Self, ScenarioError> {
        let mut table = BTreeMap::new();
        let mut section: Option<String> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            if let Some(rest) = content.strip_prefix('[') {
                let name = rest
                    .strip_suffix(']')
                    .ok_or_else(|| ScenarioError::Syntax {
                        line,
                        message: format!("unterminated section header `{content}`"),
                    })?;
                let name = name.trim();
                if !SCHEMA.iter().any(|(s, _)| *s == name) {
                    return Err(ScenarioError::UnknownSection {
                        line,
                        name: name.to_string(),
                    });
                }
                section = Some(name.to_string());
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| ScenarioError::Syntax {
                    line,
                    message: format!("expected `key = value`, got `{content}`"),
                })?;
            let key = key.trim();
            let sec = section.clone().ok_or_else(|| ScenarioError::Syntax {
                line,
                message: format!("`{key}` appears before any section header"),
            })?;
            let kind = kind_of(&sec, key).ok_or_else(|| ScenarioError::UnknownKey {
                line,
                section: sec.clone(),
                key: key.to_string(),
            })?;
            let parsed = parse_value(kind, value, line, key)?;
            if table
                .insert((sec.clone(), key.to_string()), parsed)
                .is_some()
            {
                return Err(ScenarioError::Duplicate {
                    line,
                    section: sec,
                    key: key.to_string(),
                });
            }
        }

        let mut t = Table(table);
        let env = Environment::new(
            t.number("environment", "alpha")?,
            t.number("environment", "beta")?,
            t.number("environment", "xi_los_db")?,
            t.number("environment", "xi_nlos_db")?,
        )
        .map_err(invalid)?;
        let radio = RadioConfig::new(
            t.number("radio", "fc_hz")?,
            t.number("radio", "pt_dbm")?,
            t.number("radio", "noise_dbm")?,
            t.number("radio", "gamma_th_db")?,
            t.number("radio", "h_max_m")?,
        )
        .map_err(invalid)?;
        let area =
            TargetArea::new(t.number("area", "a_m")?, t.number("area", "b_m")?).map_err(invalid)?;
        let dscs = DscPair {
            h1: t.number("dscs", "h1_m")?,
            h2: t.number("dscs", "h2_m")?,
            pt1: t.number("dscs", "pt1_dbm")?,
            pt2: t.number("dscs", "pt2_dbm")?,
        };
        if !(dscs.h1 > 0.0 && dscs.h2 > 0.0) {
            return Err(ScenarioError::Invalid("DSC altitudes must be > 0".into()));
        }
        let sweeps = Sweeps {
            r_c_list: t.list("sweeps", "r_c_list_m")?,
            altitude: t.grid("sweeps", "altitude")?,
            separation: t.grid("sweeps", "separation")?,
            a_list: t.list("sweeps", "a_list_m")?,
        };
        let joint = JointGrids {
            separation: t.grid("joint", "separation")?,
            h1: t.grid("joint", "h1")?,
            h2: t.grid("joint", "h2")?,
        };
        let flags = Flags {
            interference: t.switch("flags", "interference")?,
            clip_width: t.switch("flags", "clip_width")?,
        };
        Ok(Scenario {
            env,
            radio,
            area,
            dscs,
            sweeps,
            joint,
            flags,
        })
    }

    pub fn load(path: &Path) -> Result<Self, ScenarioError> {
        let text = std::fs::read_to_string(path).map_err(|e| ScenarioError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Scenario::parse(&text)
    }

    pub fn default_scenario() -> Self {
        Scenario::parse(DEFAULT_SCENARIO).expect("shipped default scenario parses")
    }

    /// Two-DSC template at the first separation of the sweep grid.
    pub fn interference_template(&self) -> dsc_core::Result<InterferenceScenario> {
        let s = InterferenceScenario::new(
            self.area,
            self.env,
            self.radio,
            self.sweeps.separation.min,
            [self.dscs.h1, self.dscs.h2],
            [self.dscs.pt1, self.dscs.pt2],
        )?;
        Ok(s.with_interference(self.flags.interference)
            .with_clip_width(self.flags.clip_width))
    }

    /// Canonical text form. Parsing it yields the same scenario.
    pub fn to_text(&self) -> String {
        fn grid(out: &mut String, prefix: &str, g: &SearchGrid) {
            let _ = writeln!(out, "{prefix}_min_m = {}", g.min);
            let _ = writeln!(out, "{prefix}_max_m = {}", g.max);
            let _ = writeln!(out, "{prefix}_step_m = {}", g.step);
        }
        fn list(xs: &[f64]) -> String {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        }
        fn switch(on: bool) -> &'static str {
            if on {
                "on"
            } else {
                "off"
            }
        }
        let mut out = String::new();
        let e = &self.env;
        let r = &self.radio;
        let _ = writeln!(out, "[environment]");
        let _ = writeln!(out, "alpha = {}", e.alpha);
        let _ = writeln!(out, "beta = {}", e.beta);
        let _ = writeln!(out, "xi_los_db = {}", e.xi_los);
        let _ = writeln!(out, "xi_nlos_db = {}", e.xi_nlos);
        let _ = writeln!(out, "[radio]");
        let _ = writeln!(out, "fc_hz = {}", r.fc);
        let _ = writeln!(out, "pt_dbm = {}", r.pt);
        let _ = writeln!(out, "noise_dbm = {}", r.noise);
        let _ = writeln!(out, "gamma_th_db = {}", r.gamma_th);
        let _ = writeln!(out, "h_max_m = {}", r.h_max);
        let _ = writeln!(out, "[area]");
        let _ = writeln!(out, "a_m = {}", self.area.a);
        let _ = writeln!(out, "b_m = {}", self.area.b);
        let _ = writeln!(out, "[dscs]");
        let _ = writeln!(out, "h1_m = {}", self.dscs.h1);
        let _ = writeln!(out, "h2_m = {}", self.dscs.h2);
        let _ = writeln!(out, "pt1_dbm = {}", self.dscs.pt1);
        let _ = writeln!(out, "pt2_dbm = {}", self.dscs.pt2);
        let _ = writeln!(out, "[sweeps]");
        let _ = writeln!(out, "r_c_list_m = {}", list(&self.sweeps.r_c_list));
        grid(&mut out, "altitude", &self.sweeps.altitude);
        grid(&mut out, "separation", &self.sweeps.separation);
        let _ = writeln!(out, "a_list_m = {}", list(&self.sweeps.a_list));
        let _ = writeln!(out, "[joint]");
        grid(&mut out, "separation", &self.joint.separation);
        grid(&mut out, "h1", &self.joint.h1);
        grid(&mut out, "h2", &self.joint.h2);
        let _ = writeln!(out, "[flags]");
        let _ = writeln!(out, "interference = {}", switch(self.flags.interference));
        let _ = writeln!(out, "clip_width = {}", switch(self.flags.clip_width));
        out
    }
}
