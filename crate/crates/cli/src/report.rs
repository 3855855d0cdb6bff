//! Report plumbing shared by every subcommand: header, output sinks, and the
//! JSON envelope.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use kdecomp_core::verify::Finding;
use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, Serialize)]
pub struct InputDigest {
    pub name: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn of(name: impl Into<String>, bytes: &[u8]) -> Self {
        InputDigest {
            name: name.into(),
            sha256: hex::encode(Sha256::digest(bytes)),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Header {
    pub command: String,
    pub inputs: Vec<InputDigest>,
}

impl Header {
    pub fn text(&self) -> String {
        let mut out = format!("# {}\n", self.command);
        for i in &self.inputs {
            out += &format!("# input {} sha256 {}\n", i.name, i.sha256);
        }
        out
    }
}

/// The command line as typed, with the program name normalized.
pub fn command_line(args: &[String]) -> String {
    let mut parts = vec!["kdecomp".to_string()];
    for a in args.iter().skip(1) {
        if a.is_empty() || a.chars().any(|c| c.is_whitespace() || c == '\'') {
            parts.push(format!("'{}'", a.replace('\'', r"'\''")));
        } else {
            parts.push(a.clone());
        }
    }
    parts.join(" ")
}

/// Standard output, optionally teed to a file.
pub struct Sink {
    stdout: io::Stdout,
    file: Option<BufWriter<File>>,
}

impl Sink {
    pub fn new(out: Option<&Path>) -> io::Result<Self> {
        let file = match out {
            Some(p) => Some(BufWriter::new(File::create(p)?)),
            None => None,
        };
        Ok(Sink {
            stdout: io::stdout(),
            file,
        })
    }

    pub fn write(&mut self, s: &str) -> io::Result<()> {
        let mut lock = self.stdout.lock();
        lock.write_all(s.as_bytes())?;
        lock.flush()?;
        if let Some(f) = &mut self.file {
            f.write_all(s.as_bytes())?;
        }
        Ok(())
    }

    pub fn finish(mut self) -> io::Result<()> {
        if let Some(f) = &mut self.file {
            f.flush()?;
        }
        Ok(())
    }
}

pub fn findings_text(findings: &[Finding]) -> String {
    let mut out = String::new();
    for f in findings {
        out += &format!("finding {} {} {}: {}\n", severity(f), f.semiring, f.check, f.witness);
    }
    out += &format!("findings {}\n", findings.len());
    out
}

fn severity(f: &Finding) -> String {
    serde_json::to_value(f.severity)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

/// A finished, non-streaming report.
pub struct Report {
    pub text: String,
    pub result: serde_json::Value,
    pub findings: Vec<Finding>,
}

#[derive(Serialize)]
struct Envelope<'a> {
    command: &'a str,
    inputs: &'a [InputDigest],
    result: &'a serde_json::Value,
    findings: &'a [Finding],
    exit_code: i32,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        if self.findings.is_empty() {
            0
        } else {
            1
        }
    }

    pub fn render(&self, header: &Header, json: bool) -> String {
        if json {
            let env = Envelope {
                command: &header.command,
                inputs: &header.inputs,
                result: &self.result,
                findings: &self.findings,
                exit_code: self.exit_code(),
            };
            let mut s = serde_json::to_string_pretty(&env).expect("report serializes");
            s.push('\n');
            s
        } else {
            format!("{}{}{}", header.text(), self.text, findings_text(&self.findings))
        }
    }
}
