#include "ccbench/provider.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>

namespace ccbench {

namespace {

std::vector<std::string_view> split_spaces(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && line[i] == ' ') {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ') {
            ++i;
        }
        if (i > start) {
            out.push_back(line.substr(start, i - start));
        }
    }
    return out;
}

std::string_view strip_cr(std::string_view line) {
    if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
    }
    return line;
}

bool is_lower_hex(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
    });
}

template <IeeeFloat T>
EvalResponse builtin_answer(const EvalRequest& req) {
    SignedComplex<T> z;
    try {
        z = {decode_bits<T>(req.re_hex), decode_bits<T>(req.im_hex)};
    } catch (const ParseError& e) {
        return EvalResponse::error(e.what());
    }
    try {
        const SignedComplex<T> w = builtin_eval(req.fn, z);
        return EvalResponse::ok(encode_bits(w.re), encode_bits(w.im));
    } catch (const Error& e) {
        return EvalResponse::error(e.what());
    }
}

}  // namespace

bool ProviderCapabilities::supports(Precision p) const {
    return std::find(precisions.begin(), precisions.end(), p) != precisions.end();
}

EvalResponse EvalResponse::ok(std::string re, std::string im) {
    EvalResponse r;
    r.kind = Kind::ok;
    r.re_hex = std::move(re);
    r.im_hex = std::move(im);
    return r;
}

EvalResponse EvalResponse::unsupported() {
    EvalResponse r;
    r.kind = Kind::unsupported;
    return r;
}

EvalResponse EvalResponse::error(std::string msg) {
    EvalResponse r;
    r.kind = Kind::error;
    // Replies are single lines.
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    std::replace(msg.begin(), msg.end(), '\r', ' ');
    r.message = std::move(msg);
    return r;
}

std::string format_greeting(const ProviderCapabilities& caps) {
    std::string out = "CCBENCH " + std::to_string(protocol_version) + " SUBNORMALS ";
    out += caps.subnormal_support ? "yes" : "no";
    out += " PRECISIONS ";
    for (std::size_t i = 0; i < caps.precisions.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += to_string(caps.precisions[i]);
    }
    return out;
}

ProviderCapabilities parse_greeting(std::string_view line) {
    const auto tok = split_spaces(strip_cr(line));
    if (tok.size() < 2 || tok[0] != "CCBENCH") {
        throw ProtocolError("malformed greeting: '" + std::string(line) + "'");
    }
    if (tok[1] != std::to_string(protocol_version)) {
        throw VersionError("unsupported protocol version '" + std::string(tok[1]) + "'");
    }
    if (tok.size() != 6 || tok[2] != "SUBNORMALS" || tok[4] != "PRECISIONS") {
        throw ProtocolError("malformed greeting: '" + std::string(line) + "'");
    }
    ProviderCapabilities caps;
    if (tok[3] == "yes") {
        caps.subnormal_support = true;
    } else if (tok[3] == "no") {
        caps.subnormal_support = false;
    } else {
        throw ProtocolError("SUBNORMALS must be yes or no");
    }
    std::string_view list = tok[5];
    while (!list.empty()) {
        const std::size_t comma = list.find(',');
        const std::string_view item = list.substr(0, comma);
        try {
            caps.precisions.push_back(parse_precision(item));
        } catch (const UsageError&) {
            throw ProtocolError("unknown precision '" + std::string(item) + "' in greeting");
        }
        if (comma == std::string_view::npos) {
            break;
        }
        list.remove_prefix(comma + 1);
        if (list.empty()) {
            throw ProtocolError("trailing comma in PRECISIONS");
        }
    }
    if (caps.precisions.empty()) {
        throw ProtocolError("greeting advertises no precisions");
    }
    return caps;
}

std::string format_request(const EvalRequest& req) {
    std::string out = "EVAL ";
    out += to_string(req.fn);
    out += ' ';
    out += to_string(req.precision);
    out += ' ';
    out += req.re_hex;
    out += ' ';
    out += req.im_hex;
    return out;
}

EvalRequest parse_request(std::string_view line) {
    const auto tok = split_spaces(strip_cr(line));
    if (tok.size() != 5 || tok[0] != "EVAL") {
        throw ProtocolError("expected 'EVAL <fn> <precision> <re_hex> <im_hex>'");
    }
    EvalRequest req;
    try {
        req.fn = parse_function(tok[1]);
        req.precision = parse_precision(tok[2]);
    } catch (const UsageError& e) {
        throw ProtocolError(e.what());
    }
    if (!is_lower_hex(tok[3]) || !is_lower_hex(tok[4])) {
        throw ProtocolError("bit patterns must be lowercase hex");
    }
    req.re_hex = std::string(tok[3]);
    req.im_hex = std::string(tok[4]);
    return req;
}

std::string format_response(const EvalResponse& resp) {
    switch (resp.kind) {
    case EvalResponse::Kind::ok:
        return "OK " + resp.re_hex + " " + resp.im_hex;
    case EvalResponse::Kind::unsupported:
        return "UNSUPPORTED";
    case EvalResponse::Kind::error:
        break;
    }
    return resp.message.empty() ? "ERROR unspecified" : "ERROR " + resp.message;
}

EvalResponse parse_response(std::string_view line) {
    line = strip_cr(line);
    if (line == "UNSUPPORTED") {
        return EvalResponse::unsupported();
    }
    if (line.substr(0, 6) == "ERROR ") {
        return EvalResponse::error(std::string(line.substr(6)));
    }
    if (line == "ERROR") {
        return EvalResponse::error("");
    }
    const auto tok = split_spaces(line);
    if (tok.size() == 3 && tok[0] == "OK" && is_lower_hex(tok[1]) && is_lower_hex(tok[2])) {
        return EvalResponse::ok(std::string(tok[1]), std::string(tok[2]));
    }
    throw ProtocolError("malformed reply: '" + std::string(line) + "'");
}

std::chrono::milliseconds default_timeout() {
    if (const char* env = std::getenv("CCBENCH_TIMEOUT_SECS")) {
        char* end = nullptr;
        const double secs = std::strtod(env, &end);
        if (end != env && *end == '\0' && secs > 0) {
            return std::chrono::milliseconds(static_cast<long long>(secs * 1000.0));
        }
    }
    return std::chrono::seconds(5);
}

ProviderCapabilities BuiltinProvider::capabilities() {
    return {true, supported_precisions()};
}

EvalResponse BuiltinProvider::evaluate(const EvalRequest& req) {
    if (!is_supported(req.precision)) {
        return EvalResponse::unsupported();
    }
    return dispatch_precision(req.precision, [&](auto tag) { return builtin_answer<decltype(tag)>(req); });
}

void StreamChannel::write_line(std::string_view line) {
    out_ << line << '\n';
    out_.flush();
    if (!out_) {
        throw ProtocolError("channel closed while writing");
    }
}

std::optional<std::string> StreamChannel::read_line(std::chrono::milliseconds) {
    std::string line;
    if (!std::getline(in_, line)) {
        return std::nullopt;
    }
    return line;
}

void FdChannel::write_line(std::string_view line) {
    std::string data(line);
    data += '\n';
    std::size_t off = 0;
    while (off < data.size()) {
        const ssize_t n = ::write(write_fd_, data.data() + off, data.size() - off);
        if (n < 0) {
            if (errno == EINTR) {
                continue;
            }
            throw ProtocolError(std::string("channel closed while writing: ") + std::strerror(errno));
        }
        off += static_cast<std::size_t>(n);
    }
}

std::optional<std::string> FdChannel::read_line(std::chrono::milliseconds timeout) {
    const auto deadline = std::chrono::steady_clock::now() + timeout;
    for (;;) {
        const std::size_t nl = buffer_.find('\n');
        if (nl != std::string::npos) {
            std::string line = buffer_.substr(0, nl);
            buffer_.erase(0, nl + 1);
            return line;
        }
        if (eof_) {
            if (buffer_.empty()) {
                return std::nullopt;
            }
            std::string line = std::move(buffer_);
            buffer_.clear();
            return line;
        }
        const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now());
        if (left.count() <= 0) {
            throw TimeoutError("no reply within " + std::to_string(timeout.count()) + " ms");
        }
        pollfd pfd{read_fd_, POLLIN, 0};
        const int rc = ::poll(&pfd, 1, static_cast<int>(left.count()));
        if (rc < 0) {
            if (errno == EINTR) {
                continue;
            }
            throw ProtocolError(std::string("poll failed: ") + std::strerror(errno));
        }
        if (rc == 0) {
            continue;  // deadline check above raises
        }
        char buf[4096];
        const ssize_t n = ::read(read_fd_, buf, sizeof buf);
        if (n < 0) {
            if (errno == EINTR || errno == EAGAIN) {
                continue;
            }
            throw ProtocolError(std::string("read failed: ") + std::strerror(errno));
        }
        if (n == 0) {
            eof_ = true;
        } else {
            buffer_.append(buf, static_cast<std::size_t>(n));
        }
    }
}

ProviderCapabilities handshake(LineChannel& channel, std::chrono::milliseconds timeout) {
    channel.write_line("HELLO");
    const auto line = channel.read_line(timeout);
    if (!line) {
        throw ProtocolError("provider closed the channel before greeting");
    }
    return parse_greeting(*line);
}

EvalResponse remote_eval(LineChannel& channel, const EvalRequest& req, std::chrono::milliseconds timeout) {
    channel.write_line(format_request(req));
    const auto line = channel.read_line(timeout);
    if (!line) {
        throw ProtocolError("provider closed the channel");
    }
    return parse_response(*line);
}

SubprocessProvider::SubprocessProvider(std::string command, std::chrono::milliseconds timeout)
    : command_(std::move(command)), timeout_(timeout) {
    if (command_.empty()) {
        throw UsageError("provider command is empty");
    }
    // A dead child must surface as EPIPE, not kill the harness.
    ::signal(SIGPIPE, SIG_IGN);

    int in_pipe[2];
    int out_pipe[2];
    if (::pipe(in_pipe) != 0) {
        throw ProtocolError(std::string("pipe failed: ") + std::strerror(errno));
    }
    if (::pipe(out_pipe) != 0) {
        ::close(in_pipe[0]);
        ::close(in_pipe[1]);
        throw ProtocolError(std::string("pipe failed: ") + std::strerror(errno));
    }
    const pid_t pid = ::fork();
    if (pid < 0) {
        for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) {
            ::close(fd);
        }
        throw ProtocolError(std::string("fork failed: ") + std::strerror(errno));
    }
    if (pid == 0) {
        ::dup2(in_pipe[0], STDIN_FILENO);
        ::dup2(out_pipe[1], STDOUT_FILENO);
        for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) {
            ::close(fd);
        }
        ::signal(SIGPIPE, SIG_DFL);
        ::execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
        ::_exit(127);
    }
    ::close(in_pipe[0]);
    ::close(out_pipe[1]);
    ::fcntl(in_pipe[1], F_SETFD, FD_CLOEXEC);
    ::fcntl(out_pipe[0], F_SETFD, FD_CLOEXEC);
    pid_ = pid;
    to_child_ = in_pipe[1];
    from_child_ = out_pipe[0];
    channel_ = std::make_unique<FdChannel>(from_child_, to_child_);
    try {
        caps_ = handshake(*channel_, timeout_);
    } catch (...) {
        shutdown();
        throw;
    }
}

SubprocessProvider::~SubprocessProvider() {
    shutdown();
}

EvalResponse SubprocessProvider::evaluate(const EvalRequest& req) {
    if (!channel_) {
        throw ProtocolError("provider process is not running");
    }
    return remote_eval(*channel_, req, timeout_);
}

void SubprocessProvider::shutdown() noexcept {
    channel_.reset();
    if (to_child_ >= 0) {
        ::close(to_child_);
        to_child_ = -1;
    }
    if (pid_ > 0) {
        // Closing stdin asks the child to finish; give it a moment, then kill.
        int status = 0;
        pid_t done = 0;
        for (int i = 0; i < 50 && done == 0; ++i) {
            done = ::waitpid(pid_, &status, WNOHANG);
            if (done == 0) {
                ::usleep(10000);
            }
        }
        if (done == 0) {
            ::kill(pid_, SIGKILL);
            ::waitpid(pid_, &status, 0);
        }
        pid_ = -1;
    }
    if (from_child_ >= 0) {
        ::close(from_child_);
        from_child_ = -1;
    }
}

std::unique_ptr<Provider> make_provider(std::string_view spec, std::chrono::milliseconds timeout) {
    if (spec == "builtin") {
        return std::make_unique<BuiltinProvider>();
    }
    if (spec.substr(0, 4) == "cmd:") {
        const std::string command(spec.substr(4));
        if (command.find_first_not_of(" \t") == std::string::npos) {
            throw UsageError("provider spec 'cmd:' needs a command");
        }
        return std::make_unique<SubprocessProvider>(command, timeout);
    }
    throw UsageError("provider must be 'builtin' or 'cmd:<command>', got '" + std::string(spec) + "'");
}

int serve(Provider& provider, std::istream& in, std::ostream& out, std::ostream& diag) {
    const ProviderCapabilities caps = provider.capabilities();
    std::string line;
    while (std::getline(in, line)) {
        const std::string_view text = strip_cr(line);
        std::string reply;
        if (text == "HELLO") {
            reply = format_greeting(caps);
        } else {
            try {
                const EvalRequest req = parse_request(text);
                if (!caps.supports(req.precision)) {
                    reply = format_response(EvalResponse::unsupported());
                } else {
                    reply = format_response(provider.evaluate(req));
                }
            } catch (const Error& e) {
                diag << "ccbench serve: " << e.what() << '\n';
                reply = format_response(EvalResponse::error(e.what()));
            }
        }
        out << reply << '\n';
        out.flush();
        if (!out) {
            diag << "ccbench serve: output closed\n";
            return 1;
        }
    }
    return 0;
}

int serve_builtin(std::istream& in, std::ostream& out, std::ostream& diag) {
    BuiltinProvider provider;
    return serve(provider, in, out, diag);
}

}  // namespace ccbench
