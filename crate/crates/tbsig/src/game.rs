//! Fee-market game model.
