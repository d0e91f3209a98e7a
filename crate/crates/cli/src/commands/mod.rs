pub mod analyze;
pub mod numeration;
pub mod verify;
pub mod words;
