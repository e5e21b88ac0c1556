//! Three-valued outcome of a hypothesis check.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Status {
    Holds,
    Fails,
    Unknown,
}

impl Status {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Status::Holds
        } else {
            Status::Fails
        }
    }

    /// Kleene conjunction: any Fails wins, then any Unknown.
    pub fn and(self, o: Status) -> Status {
        match (self, o) {
            (Status::Fails, _) | (_, Status::Fails) => Status::Fails,
            (Status::Unknown, _) | (_, Status::Unknown) => Status::Unknown,
            _ => Status::Holds,
        }
    }

    pub fn or(self, o: Status) -> Status {
        match (self, o) {
            (Status::Holds, _) | (_, Status::Holds) => Status::Holds,
            (Status::Unknown, _) | (_, Status::Unknown) => Status::Unknown,
            _ => Status::Fails,
        }
    }

    pub fn not(self) -> Status {
        match self {
            Status::Holds => Status::Fails,
            Status::Fails => Status::Holds,
            Status::Unknown => Status::Unknown,
        }
    }

    pub fn all<I: IntoIterator<Item = Status>>(it: I) -> Status {
        it.into_iter().fold(Status::Holds, Status::and)
    }

    pub fn is_holds(self) -> bool {
        self == Status::Holds
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Holds => "Holds",
            Status::Fails => "Fails",
            Status::Unknown => "Unknown",
        };
        f.write_str(s)
    }
}
