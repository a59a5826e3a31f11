//! JSON file I/O.

use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;

use sdp::hom::FiniteMonoid;
use sdp::system::SystemFileError;
use sdp::{FiniteGroup, GroupFile, SystemFile, TotalSystem};

use crate::error::CliError;

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })?;
    serde_json::from_str(&text).map_err(|e| CliError::Json { path: path.display().to_string(), message: e.to_string() })
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    fs::write(path, to_pretty(value) + "\n")
        .map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })
}

pub fn to_pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("outputs serialize")
}

pub fn load_group(path: &Path) -> Result<FiniteGroup, CliError> {
    Ok(FiniteGroup::from_file(&read_json::<GroupFile>(path)?)?)
}

/// A monoid target: identity and associativity are required, inverses are not.
pub fn load_monoid(path: &Path) -> Result<FiniteMonoid, CliError> {
    let file: GroupFile = read_json(path)?;
    if file.table.len() != file.order {
        return Err(CliError::InvalidArgument(format!(
            "{}: order {} but {} rows",
            path.display(),
            file.order,
            file.table.len()
        )));
    }
    Ok(FiniteMonoid::from_table(&file.table)?)
}

/// Group paths inside a system file are resolved against its directory.
pub fn load_system(path: &Path) -> Result<TotalSystem, CliError> {
    let file: SystemFile = read_json(path)?;
    let base = path.parent().unwrap_or(Path::new(""));
    file.to_system(|p| read_json::<GroupFile>(&base.join(p))).map_err(|e| match e {
        SystemFileError::System(e) => e.into(),
        SystemFileError::Load(e) => e,
    })
}
