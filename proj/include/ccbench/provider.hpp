#pragma once

// Evaluation back ends. A Provider answers bit-pattern requests for one of the
// eight functions; the builtin provider uses refmath, the subprocess provider
// speaks the "CCBENCH 1" line protocol to an external program.
//
// Protocol, one message per line:
//   harness -> provider   HELLO
//   provider -> harness   CCBENCH 1 SUBNORMALS yes|no PRECISIONS p1,p2[,p3]
//   harness -> provider   EVAL <fn> <precision> <re_hex> <im_hex>
//   provider -> harness   OK <re_hex> <im_hex> | UNSUPPORTED | ERROR <msg>

#include <chrono>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccbench/function_id.hpp"

namespace ccbench {

inline constexpr int protocol_version = 1;

struct ProviderCapabilities {
    bool subnormal_support = true;
    std::vector<Precision> precisions;

    bool supports(Precision p) const;
};

struct EvalRequest {
    FunctionId fn = FunctionId::log;
    Precision precision = Precision::binary64;
    std::string re_hex;
    std::string im_hex;
};

struct EvalResponse {
    enum class Kind { ok, unsupported, error };

    Kind kind = Kind::error;
    std::string re_hex;
    std::string im_hex;
    std::string message;

    static EvalResponse ok(std::string re, std::string im);
    static EvalResponse unsupported();
    static EvalResponse error(std::string msg);
};

std::string format_greeting(const ProviderCapabilities& caps);
/// Throws VersionError for a version other than 1, ProtocolError otherwise.
ProviderCapabilities parse_greeting(std::string_view line);

std::string format_request(const EvalRequest& req);
/// Throws ProtocolError on anything but a well-formed EVAL line. Hex text is
/// not validated here because its width depends on whether the precision is
/// supported by the receiver.
EvalRequest parse_request(std::string_view line);

std::string format_response(const EvalResponse& resp);
EvalResponse parse_response(std::string_view line);

/// Per-eval timeout: CCBENCH_TIMEOUT_SECS if set and positive, else 5 s.
std::chrono::milliseconds default_timeout();

class Provider {
public:
    virtual ~Provider() = default;

    virtual std::string name() const = 0;
    virtual ProviderCapabilities capabilities() = 0;
    /// Transport failures throw ProtocolError; everything the provider itself
    /// reports comes back as an EvalResponse.
    virtual EvalResponse evaluate(const EvalRequest& req) = 0;
};

class BuiltinProvider final : public Provider {
public:
    std::string name() const override { return "builtin"; }
    ProviderCapabilities capabilities() override;
    EvalResponse evaluate(const EvalRequest& req) override;
};

/// Typed convenience over Provider::evaluate. Returns nullopt for
/// UNSUPPORTED; throws ProtocolError for ERROR replies or bad hex.
template <IeeeFloat T>
std::optional<SignedComplex<T>> evaluate_typed(Provider& provider, FunctionId fn, SignedComplex<T> z) {
    const EvalResponse resp =
        provider.evaluate(EvalRequest{fn, precision_of<T>, encode_bits(z.re), encode_bits(z.im)});
    switch (resp.kind) {
    case EvalResponse::Kind::ok:
        try {
            return SignedComplex<T>{decode_bits<T>(resp.re_hex), decode_bits<T>(resp.im_hex)};
        } catch (const ParseError& e) {
            throw ProtocolError(std::string("bad reply: ") + e.what());
        }
    case EvalResponse::Kind::unsupported:
        return std::nullopt;
    case EvalResponse::Kind::error:
        break;
    }
    throw ProtocolError("provider error: " + resp.message);
}

/// Bidirectional line transport.
class LineChannel {
public:
    virtual ~LineChannel() = default;

    virtual void write_line(std::string_view line) = 0;
    /// Returns nullopt at end of input; throws TimeoutError when no full line
    /// arrives within `timeout`.
    virtual std::optional<std::string> read_line(std::chrono::milliseconds timeout) = 0;
};

/// Channel over iostreams. The timeout is not enforced.
class StreamChannel final : public LineChannel {
public:
    StreamChannel(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

    void write_line(std::string_view line) override;
    std::optional<std::string> read_line(std::chrono::milliseconds timeout) override;

private:
    std::istream& in_;
    std::ostream& out_;
};

/// Channel over a pair of POSIX file descriptors, with poll-based timeouts.
/// Does not own the descriptors.
class FdChannel final : public LineChannel {
public:
    FdChannel(int read_fd, int write_fd) : read_fd_(read_fd), write_fd_(write_fd) {}

    void write_line(std::string_view line) override;
    std::optional<std::string> read_line(std::chrono::milliseconds timeout) override;

private:
    int read_fd_;
    int write_fd_;
    std::string buffer_;
    bool eof_ = false;
};

ProviderCapabilities handshake(LineChannel& channel, std::chrono::milliseconds timeout = default_timeout());

EvalResponse remote_eval(LineChannel& channel, const EvalRequest& req,
                         std::chrono::milliseconds timeout = default_timeout());

/// Provider backed by a child process started with `/bin/sh -c command`.
/// The handshake runs in the constructor.
class SubprocessProvider final : public Provider {
public:
    explicit SubprocessProvider(std::string command, std::chrono::milliseconds timeout = default_timeout());
    ~SubprocessProvider() override;

    SubprocessProvider(const SubprocessProvider&) = delete;
    SubprocessProvider& operator=(const SubprocessProvider&) = delete;

    std::string name() const override { return "cmd:" + command_; }
    ProviderCapabilities capabilities() override { return caps_; }
    EvalResponse evaluate(const EvalRequest& req) override;

private:
    void shutdown() noexcept;

    std::string command_;
    std::chrono::milliseconds timeout_;
    int pid_ = -1;
    int to_child_ = -1;
    int from_child_ = -1;
    std::unique_ptr<FdChannel> channel_;
    ProviderCapabilities caps_;
};

/// Parses "builtin" or "cmd:<command line>". Throws UsageError.
std::unique_ptr<Provider> make_provider(std::string_view spec,
                                        std::chrono::milliseconds timeout = default_timeout());

/// Serves the provider side of the protocol for `provider` until end of
/// input. Malformed lines get an ERROR reply and a note on `diag`.
/// Returns the process exit status (0 on clean end of input).
int serve(Provider& provider, std::istream& in, std::ostream& out, std::ostream& diag);

int serve_builtin(std::istream& in, std::ostream& out, std::ostream& diag);

}  // namespace ccbench
