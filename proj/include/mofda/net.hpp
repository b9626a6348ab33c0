#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <string>

namespace mofda::net {

struct Address {
    std::string host;
    std::uint16_t port = 0;
};

// Accepts "host:port", ":port", or a bare port number.
Address parse_address(const std::string& text, const std::string& default_host);

enum class ReadStatus { ok, eof, timeout, error };

// Blocking newline-delimited record stream over a connected socket.
class LineStream {
public:
    LineStream() = default;
    explicit LineStream(int fd) : fd_(fd) {}
    LineStream(LineStream&& other) noexcept;
    LineStream& operator=(LineStream&& other) noexcept;
    LineStream(const LineStream&) = delete;
    LineStream& operator=(const LineStream&) = delete;
    ~LineStream();

    bool valid() const { return fd_ >= 0; }
    void set_receive_timeout(double seconds);  // 0 disables
    bool write_line(const std::string& line);  // appends '\n'
    ReadStatus read_line(std::string& line);   // strips the trailing '\n'
    void close();

private:
    int fd_ = -1;
    std::string buffer_;
};

// Connects to "host:port"; throws std::runtime_error on failure.
LineStream dial(const std::string& endpoint);

// Line-oriented request/reply server; one reply line per request line,
// connections handled sequentially.
class LineServer {
public:
    explicit LineServer(const std::string& address);  // binds and listens
    ~LineServer();
    LineServer(const LineServer&) = delete;
    LineServer& operator=(const LineServer&) = delete;

    std::uint16_t port() const { return port_; }
    void serve(const std::function<std::string(const std::string&)>& handler);
    void stop();

private:
    int listen_fd_ = -1;
    std::uint16_t port_ = 0;
    std::atomic<bool> stopping_{false};
};

}  // namespace mofda::net
