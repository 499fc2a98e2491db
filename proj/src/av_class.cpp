#include "avperm/av_class.hpp"

#include <random>

namespace avperm {

std::string AscDescWord::to_string() const {
  std::string out;
  out.reserve(letters.size());
  for (Kind k : letters) out += static_cast<char>(k);
  return out;
}

AscDescWord AscDescWord::parse(std::string_view text) {
  AscDescWord word;
  word.letters.reserve(text.size());
  for (char c : text) {
    if (c == 'A') {
      word.letters.push_back(Kind::Ascent);
    } else if (c == 'D') {
      word.letters.push_back(Kind::Descent);
    } else {
      throw Error(ErrorCode::Syntax, std::string("word letter must be A or D, got '") + c + "'");
    }
  }
  return word;
}

AscDescWord ascent_descent_word(const Permutation& p) {
  const auto v = p.values();
  AscDescWord word;
  word.letters.reserve(v.size() - 1);
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    word.letters.push_back(v[i] < v[i + 1] ? Kind::Ascent : Kind::Descent);
  }
  return word;
}

bool is_av_213_231(const Permutation& p) {
  const auto v = p.values();
  int suffix_min = v.back();
  int suffix_max = v.back();
  for (std::size_t i = v.size() - 1; i-- > 0;) {
    if (v[i] < suffix_min) {
      suffix_min = v[i];
    } else if (v[i] > suffix_max) {
      suffix_max = v[i];
    } else {
      return false;
    }
  }
  return true;
}

Permutation word_to_permutation(const AscDescWord& word) {
  const int n = word.size() + 1;
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(n));
  int lo = 1;
  int hi = n;
  for (Kind k : word.letters) {
    values.push_back(k == Kind::Ascent ? lo++ : hi--);
  }
  values.push_back(lo);
  return Permutation(std::move(values));
}

AscDescWord word_from_index(int n, std::uint64_t index) {
  if (n < 1 || n > 64) {
    throw Error(ErrorCode::InvalidArgument, "word_from_index needs 1 <= n <= 64");
  }
  AscDescWord word;
  word.letters.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 0; i < n - 1; ++i) {
    word.letters.push_back((index >> i) & 1U ? Kind::Descent : Kind::Ascent);
  }
  return word;
}

void for_each_av(int n, const std::function<void(const Permutation&)>& visit) {
  if (n < 1 || n > 63) {
    throw Error(ErrorCode::InvalidArgument, "enumeration needs 1 <= n <= 63");
  }
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  for (std::uint64_t index = 0; index < total; ++index) {
    visit(word_to_permutation(word_from_index(n, index)));
  }
}

std::vector<Permutation> enumerate_av(int n) {
  std::vector<Permutation> out;
  for_each_av(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

Permutation random_av(int n, std::uint64_t seed) {
  if (n < 1) {
    throw Error(ErrorCode::InvalidArgument, "random_av needs n >= 1");
  }
  // Raw engine bits, not a distribution object: the mapping from seed to
  // output is then identical across standard libraries.
  std::mt19937_64 engine(seed);
  AscDescWord word;
  word.letters.reserve(static_cast<std::size_t>(n - 1));
  std::uint64_t bits = 0;
  int available = 0;
  for (int i = 0; i < n - 1; ++i) {
    if (available == 0) {
      bits = engine();
      available = 64;
    }
    word.letters.push_back(bits & 1U ? Kind::Descent : Kind::Ascent);
    bits >>= 1;
    --available;
  }
  return word_to_permutation(word);
}

FactorDecomposition factor_decompose(const Permutation& p) {
  const auto v = p.values();
  const int n = p.size();
  if (n == 1) {
    return FactorDecomposition({Factor{Kind::Ascent, 1, 1}});
  }
  auto kind_at = [&](int pos) {  // pos 1-based, < n
    return v[static_cast<std::size_t>(pos - 1)] < v[static_cast<std::size_t>(pos)]
               ? Kind::Ascent
               : Kind::Descent;
  };
  std::vector<Factor> factors;
  Factor current{kind_at(1), 1, 1};
  for (int pos = 2; pos < n; ++pos) {
    const Kind k = kind_at(pos);
    if (k == current.kind) {
      current.end = pos;
    } else {
      factors.push_back(current);
      current = Factor{k, pos, pos};
    }
  }
  current.end = n;
  factors.push_back(current);
  return FactorDecomposition(std::move(factors));
}

}  // namespace avperm
