//! Stderr logging gated by the ROEGEN_LOG environment variable
//! (quiet, info or debug; unset means info).

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Verbosity {
    Quiet,
    Info,
    Debug,
}

#[derive(Clone, Copy, Debug)]
pub struct Logger(Verbosity);

impl Logger {
    pub fn from_env() -> Self {
        let level = match std::env::var("ROEGEN_LOG").as_deref() {
            Ok("quiet") => Verbosity::Quiet,
            Ok("debug") => Verbosity::Debug,
            _ => Verbosity::Info,
        };
        Logger(level)
    }

    pub fn with_level(level: Verbosity) -> Self {
        Logger(level)
    }

    pub fn info(&self, msg: impl AsRef<str>) {
        if self.0 >= Verbosity::Info {
            eprintln!("{}", msg.as_ref());
        }
    }

    pub fn debug(&self, msg: impl AsRef<str>) {
        if self.0 >= Verbosity::Debug {
            eprintln!("{}", msg.as_ref());
        }
    }
}
