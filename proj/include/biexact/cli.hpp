#ifndef BIEXACT_CLI_HPP
#define BIEXACT_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "biexact/decide.hpp"
#include "biexact/expr.hpp"

namespace biexact {

enum ExitCode { exit_ok = 0, exit_mismatch = 1, exit_input_error = 2 };

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One line of a corpus file: pair | qmode | expression | expected [| witness-kind].
struct CaseRecord {
    int line = 0;
    std::string pair;
    std::string qmode;
    std::string input;
    std::string expected;  // exact, not-exact or error
    std::optional<std::string> witness_kind;
};

/// Throws std::invalid_argument naming the offending line.
std::vector<CaseRecord> parse_corpus(const std::string& text);

struct CaseOutcome {
    std::string got;  // exact, not-exact or error
    std::optional<std::string> witness_kind;
    std::string detail;
    bool pass = false;
};

CaseOutcome run_case(const CaseRecord& rec);

/// Runs records on `threads` workers; results follow input order.
std::vector<CaseOutcome> run_corpus(const std::vector<CaseRecord>& records, unsigned threads);

std::string witness_kind_name(int kind);

/// Calls fn(ctx) with the context of the field that mode requires.
template <typename Fn>
decltype(auto) with_field(const QMode& mode, Fn&& fn)
{
    switch (mode.kind()) {
    case QMode::Kind::Transcendental:
        return fn(make_context<RatFunc1<Rational>>(mode));
    case QMode::Kind::RootOfUnity:
        return fn(make_context<Cyclotomic>(mode));
    default:
        return fn(make_context<Rational>(mode));
    }
}

}  // namespace biexact

#endif
