#include "mofda/net.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <stdexcept>

namespace mofda::net {

namespace {

[[noreturn]] void fail(const std::string& what) {
    throw std::runtime_error(what + ": " + std::strerror(errno));
}

}  // namespace

Address parse_address(const std::string& text, const std::string& default_host) {
    Address addr;
    const auto colon = text.rfind(':');
    std::string port_str;
    if (colon == std::string::npos) {
        addr.host = default_host;
        port_str = text;
    } else {
        addr.host = colon == 0 ? default_host : text.substr(0, colon);
        port_str = text.substr(colon + 1);
    }
    try {
        const int port = std::stoi(port_str);
        if (port < 0 || port > 65535) throw std::out_of_range("port");
        addr.port = static_cast<std::uint16_t>(port);
    } catch (const std::exception&) {
        throw std::runtime_error("bad address '" + text + "': expected host:port");
    }
    return addr;
}

LineStream::LineStream(LineStream&& other) noexcept
    : fd_(other.fd_), buffer_(std::move(other.buffer_)) {
    other.fd_ = -1;
}

LineStream& LineStream::operator=(LineStream&& other) noexcept {
    if (this != &other) {
        close();
        fd_ = other.fd_;
        buffer_ = std::move(other.buffer_);
        other.fd_ = -1;
    }
    return *this;
}

LineStream::~LineStream() { close(); }

void LineStream::close() {
    if (fd_ >= 0) {
        ::close(fd_);
        fd_ = -1;
    }
    buffer_.clear();
}

void LineStream::set_receive_timeout(double seconds) {
    if (fd_ < 0) return;
    timeval tv{};
    tv.tv_sec = static_cast<time_t>(seconds);
    tv.tv_usec = static_cast<suseconds_t>((seconds - static_cast<double>(tv.tv_sec)) * 1e6);
    ::setsockopt(fd_, SOL_SOCKET, SO_RCVTIMEO, &tv, sizeof(tv));
}

bool LineStream::write_line(const std::string& line) {
    if (fd_ < 0) return false;
    std::string out = line;
    out.push_back('\n');
    std::size_t sent = 0;
    while (sent < out.size()) {
        const ssize_t n = ::send(fd_, out.data() + sent, out.size() - sent, MSG_NOSIGNAL);
        if (n <= 0) {
            if (n < 0 && errno == EINTR) continue;
            return false;
        }
        sent += static_cast<std::size_t>(n);
    }
    return true;
}

ReadStatus LineStream::read_line(std::string& line) {
    if (fd_ < 0) return ReadStatus::error;
    while (true) {
        const auto pos = buffer_.find('\n');
        if (pos != std::string::npos) {
            line = buffer_.substr(0, pos);
            buffer_.erase(0, pos + 1);
            return ReadStatus::ok;
        }
        char chunk[4096];
        const ssize_t n = ::recv(fd_, chunk, sizeof(chunk), 0);
        if (n > 0) {
            buffer_.append(chunk, static_cast<std::size_t>(n));
            continue;
        }
        if (n == 0) {
            if (!buffer_.empty()) {  // final unterminated record
                line = std::move(buffer_);
                buffer_.clear();
                return ReadStatus::ok;
            }
            return ReadStatus::eof;
        }
        if (errno == EINTR) continue;
        if (errno == EAGAIN || errno == EWOULDBLOCK) return ReadStatus::timeout;
        return ReadStatus::error;
    }
}

LineStream dial(const std::string& endpoint) {
    const Address addr = parse_address(endpoint, "127.0.0.1");
    addrinfo hints{};
    hints.ai_family = AF_INET;
    hints.ai_socktype = SOCK_STREAM;
    addrinfo* info = nullptr;
    const std::string port_str = std::to_string(addr.port);
    if (::getaddrinfo(addr.host.c_str(), port_str.c_str(), &hints, &info) != 0 || !info)
        throw std::runtime_error("cannot resolve '" + addr.host + "'");
    int fd = ::socket(info->ai_family, info->ai_socktype, info->ai_protocol);
    if (fd < 0) {
        ::freeaddrinfo(info);
        fail("socket");
    }
    if (::connect(fd, info->ai_addr, info->ai_addrlen) != 0) {
        const int saved = errno;
        ::close(fd);
        ::freeaddrinfo(info);
        errno = saved;
        fail("connect to " + endpoint);
    }
    ::freeaddrinfo(info);
    const int one = 1;
    ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
    return LineStream(fd);
}

LineServer::LineServer(const std::string& address) {
    const Address addr = parse_address(address, "0.0.0.0");
    listen_fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
    if (listen_fd_ < 0) fail("socket");
    const int one = 1;
    ::setsockopt(listen_fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
    sockaddr_in sa{};
    sa.sin_family = AF_INET;
    sa.sin_port = htons(addr.port);
    if (::inet_pton(AF_INET, addr.host.c_str(), &sa.sin_addr) != 1) {
        ::close(listen_fd_);
        throw std::runtime_error("bad listen host '" + addr.host + "'");
    }
    if (::bind(listen_fd_, reinterpret_cast<sockaddr*>(&sa), sizeof(sa)) != 0) {
        const int saved = errno;
        ::close(listen_fd_);
        errno = saved;
        fail("bind " + address);
    }
    if (::listen(listen_fd_, 16) != 0) {
        const int saved = errno;
        ::close(listen_fd_);
        errno = saved;
        fail("listen");
    }
    socklen_t len = sizeof(sa);
    ::getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&sa), &len);
    port_ = ntohs(sa.sin_port);
}

LineServer::~LineServer() {
    stop();
    if (listen_fd_ >= 0) ::close(listen_fd_);
}

void LineServer::stop() { stopping_ = true; }

void LineServer::serve(const std::function<std::string(const std::string&)>& handler) {
    while (!stopping_) {
        pollfd p{listen_fd_, POLLIN, 0};
        const int r = ::poll(&p, 1, 100);
        if (r <= 0) continue;
        const int client = ::accept(listen_fd_, nullptr, nullptr);
        if (client < 0) continue;
        LineStream stream(client);
        stream.set_receive_timeout(0.25);  // lets stop() interrupt idle reads
        std::string line;
        while (!stopping_) {
            const ReadStatus status = stream.read_line(line);
            if (status == ReadStatus::timeout) continue;
            if (status != ReadStatus::ok) break;
            if (!stream.write_line(handler(line))) break;
        }
    }
}

}  // namespace mofda::net
