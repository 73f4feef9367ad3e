use std::path::Path;
use std::time::Instant;

use serde::Serialize;
use serde_json::{Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), pass, detail: detail.into() }
    }
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub command: String,
    pub params: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub checks: Vec<Check>,
    pub pass: bool,
    /// Only filled with `--timing`, so reports stay byte-identical by default.
    pub wall_ms: Option<u64>,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            params: Map::new(),
            seed: None,
            checks: Vec::new(),
            pass: true,
            wall_ms: None,
        }
    }

    pub fn param(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.params.insert(key.to_string(), serde_json::to_value(value).expect("serializable"));
        self
    }

    pub fn check(&mut self, c: Check) {
        self.pass &= c.pass;
        self.checks.push(c);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        for c in checks {
            self.check(c);
        }
    }

    pub fn finish(&mut self, started: Instant, timing: bool) {
        if timing {
            self.wall_ms = Some(started.elapsed().as_millis() as u64);
        }
    }

    pub fn print_checks(&self) {
        for c in &self.checks {
            println!("{} {}: {}", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail);
        }
    }

    pub fn write_json(&self, path: &Path) -> std::io::Result<()> {
        let mut text = serde_json::to_string_pretty(self).expect("serializable");
        text.push('\n');
        std::fs::write(path, text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_is_conjunction() {
        let mut r = RunReport::new("x");
        r.check(Check::new("a", true, ""));
        assert!(r.pass);
        r.extend([Check::new("b", false, ""), Check::new("c", true, "")]);
        assert!(!r.pass);
        r.finish(Instant::now(), false);
        assert!(r.wall_ms.is_none());
        let v = serde_json::to_value(&r).unwrap();
        assert!(v.get("seed").is_none());
    }
}
