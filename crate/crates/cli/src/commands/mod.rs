pub mod spectrum;
pub mod tabulate;
pub mod verify;

use crate::CmdError;

pub fn require_seed(flag: Option<u32>, file: Option<u32>) -> Result<u32, CmdError> {
    let p = flag
        .or(file)
        .ok_or_else(|| CmdError::usage("missing required --p (or `p` in the config file)"))?;
    if p < 1 {
        return Err(CmdError::usage("--p must be >= 1"));
    }
    Ok(p)
}
