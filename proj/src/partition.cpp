#include "kvertex/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace kvertex {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
      throw std::invalid_argument("Partition: parts must be weakly decreasing and positive");
    size_ += parts_[i];
  }
}

Partition Partition::parse(const std::string& s) {
  std::vector<int> parts;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("Partition::parse: empty part in '" + s + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size())
      throw std::invalid_argument("Partition::parse: bad part '" + tok + "' in '" + s + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> t(parts_.empty() ? 0 : parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++t[j];
  return Partition(std::move(t));
}

bool Partition::contains(const Partition& o) const {
  for (int i = 0; i < o.length(); ++i)
    if (part(i) < o.part(i)) return false;
  return true;
}

std::string Partition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

void enumerate_rec(int n, int maxpart, std::vector<int>& acc,
                   std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int p = std::min(n, maxpart); p >= 1; --p) {
    acc.push_back(p);
    enumerate_rec(n - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: negative n");
  std::vector<Partition> out;
  std::vector<int> acc;
  enumerate_rec(n, n, acc, out);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto pk = enumerate_partitions(k);
    out.insert(out.end(), pk.begin(), pk.end());
  }
  return out;
}

Rational z_of(const Partition& mu) {
  mpz_class z = 1;
  int run = 0, prev = -1;
  for (int i = 0; i <= mu.length(); ++i) {
    int p = i < mu.length() ? mu.parts()[i] : 0;
    if (p == prev) {
      ++run;
    } else {
      if (prev > 0) {
        mpz_class f, pw;
        mpz_fac_ui(f.get_mpz_t(), run);
        mpz_ui_pow_ui(pw.get_mpz_t(), prev, run);
        z *= f * pw;
      }
      prev = p;
      run = 1;
    }
  }
  return Rational(mpq_class(z));
}

namespace {

// beta-set of lambda: strictly decreasing first-column hook lengths
// lambda_i + (len - 1 - i).  Removing a border strip of size r means
// replacing some entry b by b - r >= 0 not already present; the strip
// height is the number of entries strictly between b - r and b.
std::vector<int> beta_set(const Partition& la) {
  std::vector<int> b(la.length());
  for (int i = 0; i < la.length(); ++i) b[i] = la.parts()[i] + la.length() - 1 - i;
  return b;
}

Partition from_beta(std::vector<int> b) {
  std::sort(b.begin(), b.end(), std::greater<int>());
  std::vector<int> parts;
  int len = static_cast<int>(b.size());
  for (int i = 0; i < len; ++i) {
    int p = b[i] - (len - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return Partition(std::move(parts));
}

std::int64_t mn_rec(const Partition& la, const Partition& mu, std::size_t k);

std::map<std::pair<Partition, Partition>, std::int64_t> mn_cache;
std::mutex mn_mutex;

std::int64_t mn_memo(const Partition& la, const Partition& mu, std::size_t k) {
  Partition rest(std::vector<int>(mu.parts().begin() + k, mu.parts().end()));
  auto key = std::make_pair(la, rest);
  {
    std::lock_guard<std::mutex> lk(mn_mutex);
    auto it = mn_cache.find(key);
    if (it != mn_cache.end()) return it->second;
  }
  std::int64_t v = mn_rec(la, key.second, 0);
  std::lock_guard<std::mutex> lk(mn_mutex);
  mn_cache.emplace(std::move(key), v);
  return v;
}

std::int64_t mn_rec(const Partition& la, const Partition& mu, std::size_t k) {
  if (la.empty()) return 1;
  int r = mu.parts()[k];
  std::vector<int> b = beta_set(la);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    int nb = b[i] - r;
    if (nb < 0) continue;
    bool occupied = false;
    int height = 0;
    for (int v : b) {
      if (v == nb) occupied = true;
      if (v > nb && v < b[i]) ++height;
    }
    if (occupied) continue;
    std::vector<int> b2 = b;
    b2[i] = nb;
    std::int64_t sub = mn_memo(from_beta(std::move(b2)), mu, k + 1);
    total += (height % 2 == 0) ? sub : -sub;
  }
  return total;
}

}  // namespace

std::int64_t mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("mn_character: |lambda| != |mu|");
  return mn_memo(lambda, mu, 0);
}

}  // namespace kvertex
