use serde_json::{json, Map, Value};

/// Output of one subcommand: text lines for humans, structured results for
/// `--json`, and the verdict that decides the exit code.
pub struct Report {
    command: &'static str,
    inputs: Map<String, Value>,
    results: Vec<Value>,
    lines: Vec<String>,
    ok: bool,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            inputs: Map::new(),
            results: Vec::new(),
            lines: Vec::new(),
            ok: true,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    pub fn result(&mut self, value: Value) {
        self.results.push(value);
    }

    pub fn fail(&mut self) {
        self.ok = false;
    }

    pub fn ok(&self) -> bool {
        self.ok
    }

    pub fn verdict_line(&mut self) {
        let v = if self.ok { "OK" } else { "FAIL" };
        self.line(format!("verdict: {v}"));
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            let envelope = json!({
                "command": self.command,
                "inputs": Value::Object(self.inputs.clone()),
                "results": self.results,
                "ok": self.ok,
            });
            serde_json::to_string_pretty(&envelope).expect("json values serialize")
        } else {
            self.lines.join("\n")
        }
    }
}
