//! Start the HTTP service on a free port and call it.
//!
//!     cargo run --example service

use std::io::{Read, Write};
use std::net::TcpStream;

use trvg::service::Server;

fn request(port: u16, method: &str, path: &str, body: &str) -> std::io::Result<String> {
    let mut s = TcpStream::connect(("127.0.0.1", port))?;
    write!(
        s,
        "{method} {path} HTTP/1.1\r\nHost: localhost\r\nContent-Length: {}\r\nConnection: close\r\n\r\n{body}",
        body.len()
    )?;
    let mut out = String::new();
    s.read_to_string(&mut out)?;
    Ok(out.split_once("\r\n\r\n").map(|(_, b)| b.to_string()).unwrap_or_default())
}

fn main() -> trvg::Result<()> {
    let port = Server::bind("127.0.0.1", 0)?.spawn(2);
    println!("listening on {port}");

    let fixture = request(port, "GET", "/api/fixture/fig1_k5", "")?;
    println!("extract: {}", request(port, "POST", "/api/extract", &fixture)?);
    println!("classify: {}", request(port, "GET", "/api/classify?multipartite=2,3,4", "")?);
    let k35 = r#"{"graph":{"n":8,"edges":[[0,3],[0,4],[0,5],[0,6],[0,7],[1,3],[1,4],[1,5],[1,6],[1,7],[2,3],[2,4],[2,5],[2,6],[2,7]]},"mode":"trvg","budget":{"seconds":5}}"#;
    println!("decide K3,5: {}", request(port, "POST", "/api/decide", k35)?);
    Ok(())
}
