//! `key=value` config files merged into the argument list.

use std::ffi::OsString;
use std::fs;

use clap::CommandFactory;

use crate::args::Cli;

/// Path given by `--config PATH` or `--config=PATH`.
fn config_path(argv: &[OsString]) -> Option<String> {
    let mut it = argv.iter().map(|a| a.to_string_lossy().into_owned());
    while let Some(a) = it.next() {
        if a == "--config" {
            return it.next();
        }
        if let Some(p) = a.strip_prefix("--config=") {
            return Some(p.to_string());
        }
    }
    None
}

fn subcommand_name(argv: &[OsString]) -> Option<String> {
    let cmd = Cli::command();
    argv.iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .find(|a| cmd.find_subcommand(a).is_some())
}

fn given(argv: &[OsString], flag: &str) -> bool {
    argv.iter().any(|a| {
        let a = a.to_string_lossy();
        a == flag || a.starts_with(&format!("{flag}="))
    })
}

/// Appends `--key value` for every config entry whose flag is absent from
/// `argv`. Keys may use `_` or `-`; booleans take `true`/`false`.
pub fn merge(argv: Vec<OsString>) -> Result<Vec<OsString>, String> {
    let Some(path) = config_path(&argv) else {
        return Ok(argv);
    };
    let text = fs::read_to_string(&path).map_err(|e| format!("cannot read config file {path}: {e}"))?;
    let cmd = Cli::command();
    let sub = subcommand_name(&argv).and_then(|s| cmd.find_subcommand(&s).cloned());
    let mut out = argv.clone();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| format!("{path}:{}: expected key=value", lineno + 1))?;
        let key = k.trim().replace('_', "-");
        let value = v.trim();
        if key == "config" {
            return Err(format!("{path}:{}: config files cannot nest", lineno + 1));
        }
        let flag = format!("--{key}");
        if given(&argv, &flag) {
            continue;
        }
        let arg = sub
            .iter()
            .flat_map(|s| s.get_arguments())
            .chain(cmd.get_arguments())
            .find(|a| a.get_long() == Some(key.as_str()))
            .ok_or_else(|| format!("{path}:{}: unknown key '{}'", lineno + 1, k.trim()))?;
        if arg.get_action().takes_values() {
            out.push(flag.into());
            out.push(value.into());
        } else {
            match value {
                "true" => out.push(flag.into()),
                "false" => {}
                _ => return Err(format!("{path}:{}: '{key}' takes true or false", lineno + 1)),
            }
        }
    }
    Ok(out)
}
