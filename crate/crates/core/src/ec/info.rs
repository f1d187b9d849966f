use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InfoArrayError {
    #[error("info array has {0} entries, the header needs 6")]
    NoHeader(usize),
    #[error("header announces {need} entries but only {have} are present")]
    Truncated { have: usize, need: usize },
}

/// Decoded report.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct InfoArray {
    pub legacy_info: i32,
    pub what_used: i32,
    pub how_used: i32,
    pub info: i32,
    pub arg_reports: Vec<i32>,
    pub call_reports: Vec<i32>,
}

impl InfoArray {
    pub fn parse(raw: &[i32]) -> Result<Self, InfoArrayError> {
        if raw.len() < 6 {
            return Err(InfoArrayError::NoHeader(raw.len()));
        }
        let na = raw[4].max(0) as usize;
        let nc = raw[5].max(0) as usize;
        let need = 6 + na + nc;
        if raw.len() < need {
            return Err(InfoArrayError::Truncated { have: raw.len(), need });
        }
        Ok(InfoArray {
            legacy_info: raw[0],
            what_used: raw[1],
            how_used: raw[2],
            info: raw[3],
            arg_reports: raw[6..6 + na].to_vec(),
            call_reports: raw[6 + na..need].to_vec(),
        })
    }

    pub fn num_args(&self) -> usize {
        self.arg_reports.len()
    }

    pub fn num_calls(&self) -> usize {
        self.call_reports.len()
    }

    pub fn to_raw(&self) -> Vec<i32> {
        let mut v = vec![
            self.legacy_info,
            self.what_used,
            self.how_used,
            self.info,
            self.num_args() as i32,
            self.num_calls() as i32,
        ];
        v.extend(&self.arg_reports);
        v.extend(&self.call_reports);
        v
    }
}

/// A fresh report buffer: every slot -1, so no argument counts as pre-checked.
///
/// Reusing a buffer from an earlier call carries its 0/1 argument slots
/// over as "already checked"; start from this helper to avoid that.
pub fn info_array_buffer(len: usize) -> Vec<i32> {
    vec![-1; len]
}

pub fn describe_arg_code(code: i32) -> &'static str {
    match code {
        -1 => "not checked",
        0 => "no Inf/NaN",
        1 => "input Inf/NaN",
        2 => "output Inf/NaN",
        3 => "input Inf/NaN, output Inf/NaN",
        _ => "invalid code",
    }
}

pub fn describe_call_code(code: i32) -> &'static str {
    match code {
        -1 => "not called or not checked",
        0 => "no Inf/NaN",
        1 => "deeper call signaled",
        2 => "input Inf/NaN",
        3 => "output Inf/NaN",
        4 => "input Inf/NaN, output Inf/NaN",
        _ => "invalid code",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let raw = [0, 1, 1, -3, 2, 2, 1, 0, -1, -1];
        let ia = InfoArray::parse(&raw).unwrap();
        assert_eq!(ia.info, -3);
        assert_eq!(ia.arg_reports, vec![1, 0]);
        assert_eq!(ia.to_raw(), raw.to_vec());
        assert!(InfoArray::parse(&raw[..9]).is_err());
        assert!(InfoArray::parse(&[1]).is_err());
    }
}
