#include "ntl/runs.hpp"

#include <cctype>
#include <stdexcept>

namespace ntl {

const char* to_string(RunConstraint c) noexcept {
  switch (c) {
    case RunConstraint::LengthExceedsPeak: return "LengthExceedsPeak";
    case RunConstraint::PeaksNotIncreasing: return "PeaksNotIncreasing";
    case RunConstraint::ValleysNotIncreasing: return "ValleysNotIncreasing";
    case RunConstraint::PeakExceedsRank: return "PeakExceedsRank";
  }
  return "?";
}

namespace {

[[noreturn]] void violate(RunConstraint constraint, std::size_t position,
                          const std::string& detail) {
  throw RunConstraintError(constraint, position,
                           std::string(to_string(constraint)) + " at pair " +
                               std::to_string(position) + ": " + detail);
}

}  // namespace

RunSequence RunSequence::validate(
    const std::vector<std::pair<int, int>>& pairs, int rank) {
  if (rank < 0) throw InputError("rank must be nonnegative");
  std::vector<RunPair> out;
  out.reserve(pairs.size());
  int previous_peak = 0;
  int previous_valley = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [peak, length] = pairs[i];
    const int valley = peak - length + 1;
    if (length < 1 || length > peak)
      violate(RunConstraint::LengthExceedsPeak, i,
              "run length " + std::to_string(length) + " outside [1, " +
                  std::to_string(peak) + "]");
    if (i > 0 && peak <= previous_peak)
      violate(RunConstraint::PeaksNotIncreasing, i,
              "peak " + std::to_string(peak) + " does not exceed " +
                  std::to_string(previous_peak));
    if (i > 0 && valley <= previous_valley)
      violate(RunConstraint::ValleysNotIncreasing, i,
              "valley " + std::to_string(valley) + " does not exceed " +
                  std::to_string(previous_valley));
    if (peak > rank)
      violate(RunConstraint::PeakExceedsRank, i,
              "peak " + std::to_string(peak) + " exceeds rank " +
                  std::to_string(rank));
    previous_peak = peak;
    previous_valley = valley;
    out.push_back(RunPair{peak, length});
  }
  return RunSequence(std::move(out), rank);
}

int RunSequence::degree() const noexcept {
  int total = 0;
  for (const RunPair& pair : pairs_) total += pair.length;
  return total;
}

RunSequence monomial_to_runs(const NtlMonomial& m) {
  const auto& letters = m.word().letters();
  std::vector<std::pair<int, int>> pairs;
  std::size_t i = 0;
  while (i < letters.size()) {
    std::size_t run_end = i + 1;
    while (run_end < letters.size() &&
           letters[run_end] == letters[run_end - 1] - 1)
      ++run_end;
    if (run_end < letters.size() && letters[run_end] <= letters[run_end - 1])
      throw std::logic_error("canonical word has a non-unit descent");
    pairs.emplace_back(letters[i], static_cast<int>(run_end - i));
    i = run_end;
  }
  return RunSequence::validate(pairs, m.rank());
}

NtlMonomial runs_to_monomial(const RunSequence& rs) {
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(rs.degree()));
  for (const RunPair& pair : rs.pairs())
    for (int letter = pair.peak; letter >= pair.valley(); --letter)
      letters.push_back(letter);
  return NtlMonomial(Word(std::move(letters), rs.rank()));
}

std::string format_runs(const RunSequence& rs) {
  std::string out;
  for (const RunPair& pair : rs.pairs())
    out += "(" + std::to_string(pair.peak) + "," +
           std::to_string(pair.length) + ")";
  return out;
}

namespace {

void skip_space(std::string_view text, std::size_t& i) {
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
    ++i;
}

int parse_int(std::string_view text, std::size_t& i) {
  skip_space(text, i);
  bool negative = false;
  if (i < text.size() && text[i] == '-') {
    negative = true;
    ++i;
  }
  if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
    throw ParseError("expected an integer at position " + std::to_string(i));
  long value = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    value = value * 10 + (text[i] - '0');
    if (value > 1'000'000) throw ParseError("integer too large");
    ++i;
  }
  return negative ? -static_cast<int>(value) : static_cast<int>(value);
}

void expect(std::string_view text, std::size_t& i, char c) {
  skip_space(text, i);
  if (i >= text.size() || text[i] != c)
    throw ParseError(std::string("expected '") + c + "' at position " +
                     std::to_string(i));
  ++i;
}

}  // namespace

RunSequence parse_runs(std::string_view text, int rank) {
  std::vector<std::pair<int, int>> pairs;
  std::size_t i = 0;
  skip_space(text, i);
  while (i < text.size()) {
    expect(text, i, '(');
    const int peak = parse_int(text, i);
    expect(text, i, ',');
    const int length = parse_int(text, i);
    expect(text, i, ')');
    pairs.emplace_back(peak, length);
    skip_space(text, i);
  }
  return RunSequence::validate(pairs, rank);
}

}  // namespace ntl
