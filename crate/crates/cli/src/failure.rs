use adrg::Error;

/// Process exit codes.
pub mod code {
    pub const OK: i32 = 0;
    pub const FALSE: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const PRECONDITION: i32 = 3;
    pub const INVARIANT: i32 = 4;
    pub const REFUSED: i32 = 5;
}

#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn parse(message: impl Into<String>) -> Self {
        Failure {
            code: code::PARSE,
            message: message.into(),
        }
    }

    pub fn invariant(message: impl Into<String>) -> Self {
        Failure {
            code: code::INVARIANT,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Graph6 { .. }
            | Error::Json(_)
            | Error::UnknownGraph { .. }
            | Error::InvalidArgument(_) => code::PARSE,
            Error::VertexOutOfRange { .. }
            | Error::SameVertex(_)
            | Error::NotSimple { .. }
            | Error::Disconnected
            | Error::NotCospectral => code::PRECONDITION,
            Error::Invariant(_) => code::INVARIANT,
            Error::NotWalkRegular(_)
            | Error::Refused(_)
            | Error::SizeBound(_)
            | Error::SearchBudget(_) => code::REFUSED,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: code::PARSE,
            message: e.to_string(),
        }
    }
}
