// Copyright 2026 The mrcheck Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mrcheck/metrics.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <unordered_map>
#include <unordered_set>

#include "absl/strings/str_cat.h"
#include "mrcheck/errors.h"
#include "mrcheck/parallel.h"
#include "mrcheck/tokenizer.h"
#include "string_view_util.h"

namespace mrcheck {
namespace {

// N-grams are keyed by their tokens joined with single spaces; tokens never
// contain whitespace.
using Counts = std::unordered_map<std::string, int>;

std::string NgramKey(const Tokens& tokens, size_t begin, int n) {
  std::string key = tokens[begin];
  for (size_t i = begin + 1; i < begin + n; ++i) {
    key.push_back(' ');
    key.append(tokens[i]);
  }
  return key;
}

size_t NgramTotal(size_t length, int n) {
  return length >= static_cast<size_t>(n) ? length - n + 1 : 0;
}

// N-grams of order n in order of first occurrence, with counts.
struct OrderedCounts {
  std::vector<std::string> keys;
  Counts counts;
};

OrderedCounts CountNgrams(const Tokens& tokens, int n) {
  OrderedCounts out;
  for (size_t i = 0; i < NgramTotal(tokens.size(), n); ++i) {
    std::string key = NgramKey(tokens, i, n);
    if (out.counts[key]++ == 0) out.keys.push_back(std::move(key));
  }
  return out;
}

// Per n-gram maximum count over the references.
Counts MaxRefCounts(const std::vector<Tokens>& refs, int n) {
  Counts merged;
  for (const Tokens& ref : refs) {
    for (const auto& [key, count] : CountNgrams(ref, n).counts) {
      int& slot = merged[key];
      slot = std::max(slot, count);
    }
  }
  return merged;
}

size_t ClippedHits(const OrderedCounts& cand, const Counts& refs) {
  size_t hits = 0;
  for (const auto& [key, count] : cand.counts) {
    auto it = refs.find(key);
    if (it != refs.end()) hits += std::min(count, it->second);
  }
  return hits;
}

// Closest reference length; ties go to the shorter reference.
size_t ClosestRefLength(size_t cand_length, const std::vector<Tokens>& refs) {
  size_t best = refs.front().size();
  for (const Tokens& ref : refs) {
    const size_t len = ref.size();
    const auto diff = [&](size_t l) {
      return l > cand_length ? l - cand_length : cand_length - l;
    };
    if (diff(len) < diff(best) || (diff(len) == diff(best) && len < best)) {
      best = len;
    }
  }
  return best;
}

absl::Status Validate(const ScoredSet& set, std::string_view metric) {
  if (set.items.empty()) {
    return MakeError(absl::StatusCode::kInvalidArgument,
                     ErrorKind::kEmptyInput,
                     absl::StrCat(ToAbsl(metric), " of an empty set"));
  }
  for (size_t i = 0; i < set.items.size(); ++i) {
    if (set.items[i].references.empty()) {
      return MakeError(absl::StatusCode::kInvalidArgument,
                       ErrorKind::kMalformed,
                       absl::StrCat(ToAbsl(metric), ": item ", i,
                                    " has no reference"));
    }
  }
  return absl::OkStatus();
}

absl::Status ValidateOrder(int max_n, std::string_view metric) {
  if (max_n >= 1) return absl::OkStatus();
  return MakeError(absl::StatusCode::kInvalidArgument, ErrorKind::kConfig,
                   absl::StrCat(ToAbsl(metric), ": n-gram order must be positive"));
}

struct BleuStats {
  std::vector<size_t> hits;
  std::vector<size_t> totals;
  size_t cand_length = 0;
  size_t ref_length = 0;
};

BleuStats ItemBleuStats(const ScoredItem& item, int max_n) {
  BleuStats stats;
  stats.hits.resize(max_n);
  stats.totals.resize(max_n);
  for (int n = 1; n <= max_n; ++n) {
    stats.hits[n - 1] =
        ClippedHits(CountNgrams(item.candidate, n),
                    MaxRefCounts(item.references, n));
    stats.totals[n - 1] = NgramTotal(item.candidate.size(), n);
  }
  stats.cand_length = item.candidate.size();
  stats.ref_length = ClosestRefLength(item.candidate.size(), item.references);
  return stats;
}

double BrevityPenalty(double cand_length, double ref_length) {
  if (cand_length > ref_length) return 1.0;
  return std::exp(1.0 - ref_length / cand_length);
}

size_t Lcs(const Tokens& a, const Tokens& b) {
  std::vector<size_t> row(b.size() + 1, 0);
  for (const std::string& x : a) {
    size_t diagonal = 0;
    for (size_t j = 1; j <= b.size(); ++j) {
      const size_t above = row[j];
      row[j] = x == b[j - 1] ? diagonal + 1 : std::max(row[j], row[j - 1]);
      diagonal = above;
    }
  }
  return row[b.size()];
}

double ItemRougeL(const ScoredItem& item, double beta) {
  if (item.candidate.empty()) return 0.0;
  double prec_max = 0;
  double rec_max = 0;
  for (const Tokens& ref : item.references) {
    if (ref.empty()) continue;
    const auto lcs = static_cast<double>(Lcs(ref, item.candidate));
    prec_max = std::max(prec_max, lcs / item.candidate.size());
    rec_max = std::max(rec_max, lcs / ref.size());
  }
  if (prec_max == 0 || rec_max == 0) return 0.0;
  const double b2 = beta * beta;
  return (1 + b2) * prec_max * rec_max / (rec_max + b2 * prec_max);
}

double MeteorAgainst(const Tokens& cand, const Tokens& ref,
                     const MeteorParams& params) {
  if (cand.empty() || ref.empty()) return 0.0;
  std::unordered_map<std::string_view, std::vector<size_t>> positions;
  for (size_t j = 0; j < ref.size(); ++j) positions[ref[j]].push_back(j);
  std::vector<bool> used(ref.size(), false);
  // Alignment: each candidate token takes the reference position right
  // after its predecessor's when free, else the leftmost free one.
  std::vector<std::optional<size_t>> align(cand.size());
  size_t matches = 0;
  for (size_t i = 0; i < cand.size(); ++i) {
    auto it = positions.find(cand[i]);
    if (it == positions.end()) continue;
    std::optional<size_t> pick;
    if (i > 0 && align[i - 1]) {
      const size_t next = *align[i - 1] + 1;
      if (next < ref.size() && !used[next] && ref[next] == cand[i]) {
        pick = next;
      }
    }
    if (!pick) {
      for (size_t j : it->second) {
        if (!used[j]) {
          pick = j;
          break;
        }
      }
    }
    if (!pick) continue;
    used[*pick] = true;
    align[i] = pick;
    ++matches;
  }
  if (matches == 0) return 0.0;
  size_t chunks = 0;
  for (size_t i = 0; i < cand.size(); ++i) {
    if (!align[i]) continue;
    const bool continues =
        i > 0 && align[i - 1] && *align[i - 1] + 1 == *align[i];
    if (!continues) ++chunks;
  }
  const double m = static_cast<double>(matches);
  const double precision = m / cand.size();
  const double recall = m / ref.size();
  const double fmean = precision * recall /
                       (params.alpha * precision + (1 - params.alpha) * recall);
  const double penalty =
      params.gamma * std::pow(static_cast<double>(chunks) / m, params.beta);
  return fmean * (1 - penalty);
}

// Tf-idf weights per order for one sentence.
struct CiderVector {
  std::vector<std::unordered_map<std::string, double>> weights;
  std::vector<double> norms;
  int length = 0;  // bigram count, as in the reference code
};

}  // namespace

ScoredItem MakeScoredItem(std::string_view candidate,
                          std::span<const std::string> references) {
  ScoredItem item;
  item.candidate = Tokenize(candidate);
  for (const std::string& ref : references) {
    item.references.push_back(Tokenize(ref));
  }
  return item;
}

absl::StatusOr<double> Bleu(const ScoredSet& set, int max_n, int jobs) {
  if (absl::Status s = Validate(set, "BLEU"); !s.ok()) return s;
  if (absl::Status s = ValidateOrder(max_n, "BLEU"); !s.ok()) return s;
  std::vector<BleuStats> per_item =
      ParallelMap(set.items.size(), jobs, [&](size_t i) {
        return ItemBleuStats(set.items[i], max_n);
      });
  BleuStats total;
  total.hits.assign(max_n, 0);
  total.totals.assign(max_n, 0);
  for (const BleuStats& s : per_item) {
    for (int n = 0; n < max_n; ++n) {
      total.hits[n] += s.hits[n];
      total.totals[n] += s.totals[n];
    }
    total.cand_length += s.cand_length;
    total.ref_length += s.ref_length;
  }
  if (total.cand_length == 0) return 0.0;
  double log_sum = 0;
  for (int n = 0; n < max_n; ++n) {
    if (total.hits[n] == 0) return 0.0;
    log_sum += std::log(static_cast<double>(total.hits[n]) /
                        static_cast<double>(total.totals[n]));
  }
  return BrevityPenalty(static_cast<double>(total.cand_length),
                        static_cast<double>(total.ref_length)) *
         std::exp(log_sum / max_n);
}

double SmoothedSentenceBleu(const ScoredItem& item, int max_n,
                            double epsilon) {
  if (item.candidate.empty() || item.references.empty() || max_n < 1) {
    return 0.0;
  }
  const BleuStats s = ItemBleuStats(item, max_n);
  double log_sum = 0;
  for (int n = 0; n < max_n; ++n) {
    log_sum += std::log((s.hits[n] + epsilon) / (s.totals[n] + epsilon));
  }
  return BrevityPenalty(static_cast<double>(s.cand_length),
                        static_cast<double>(s.ref_length)) *
         std::exp(log_sum / max_n);
}

absl::StatusOr<double> Nist(const ScoredSet& set, int max_n, int jobs) {
  if (absl::Status s = Validate(set, "NIST"); !s.ok()) return s;
  if (absl::Status s = ValidateOrder(max_n, "NIST"); !s.ok()) return s;
  // Information weights come from every reference sentence of the set.
  std::vector<Counts> ref_counts(max_n);
  size_t ref_words = 0;
  double avg_ref_length = 0;
  for (const ScoredItem& item : set.items) {
    size_t item_words = 0;
    for (const Tokens& ref : item.references) {
      item_words += ref.size();
      for (int n = 1; n <= max_n; ++n) {
        for (size_t i = 0; i < NgramTotal(ref.size(), n); ++i) {
          ++ref_counts[n - 1][NgramKey(ref, i, n)];
        }
      }
    }
    ref_words += item_words;
    avg_ref_length += static_cast<double>(item_words) /
                      static_cast<double>(item.references.size());
  }
  auto info = [&](const std::string& key, int n) {
    const double count = ref_counts[n - 1].at(key);
    double prefix_count = static_cast<double>(ref_words);
    if (n > 1) {
      prefix_count = ref_counts[n - 2].at(key.substr(0, key.rfind(' ')));
    }
    return std::log2(prefix_count / count);
  };
  struct ItemStats {
    std::vector<double> info;
    std::vector<size_t> totals;
  };
  std::vector<ItemStats> per_item =
      ParallelMap(set.items.size(), jobs, [&](size_t i) {
        const ScoredItem& item = set.items[i];
        ItemStats stats{std::vector<double>(max_n, 0.0),
                        std::vector<size_t>(max_n, 0)};
        for (int n = 1; n <= max_n; ++n) {
          const OrderedCounts cand = CountNgrams(item.candidate, n);
          const Counts refs = MaxRefCounts(item.references, n);
          for (const std::string& key : cand.keys) {
            auto it = refs.find(key);
            if (it == refs.end()) continue;
            const int hits = std::min(cand.counts.at(key), it->second);
            stats.info[n - 1] += info(key, n) * hits;
          }
          stats.totals[n - 1] = NgramTotal(item.candidate.size(), n);
        }
        return stats;
      });
  double score = 0;
  for (int n = 0; n < max_n; ++n) {
    double info_sum = 0;
    size_t total = 0;
    for (const ItemStats& s : per_item) {
      info_sum += s.info[n];
      total += s.totals[n];
    }
    if (total > 0) score += info_sum / static_cast<double>(total);
  }
  size_t cand_words = 0;
  for (const ScoredItem& item : set.items) cand_words += item.candidate.size();
  const double ratio = static_cast<double>(cand_words) / avg_ref_length;
  if (ratio <= 0) return 0.0;
  if (ratio < 1) {
    const double beta = -std::log(0.5) / std::pow(std::log(1.5), 2);
    score *= std::exp(-beta * std::pow(std::log(ratio), 2));
  }
  return score;
}

absl::StatusOr<double> RougeL(const ScoredSet& set, double beta, int jobs) {
  if (absl::Status s = Validate(set, "ROUGE-L"); !s.ok()) return s;
  std::vector<double> scores =
      ParallelMap(set.items.size(), jobs, [&](size_t i) {
        return ItemRougeL(set.items[i], beta);
      });
  double sum = 0;
  for (double s : scores) sum += s;
  return sum / static_cast<double>(scores.size());
}

absl::StatusOr<double> MeteorExact(const ScoredSet& set,
                                   const MeteorParams& params, int jobs) {
  if (absl::Status s = Validate(set, "METEOR"); !s.ok()) return s;
  std::vector<double> scores =
      ParallelMap(set.items.size(), jobs, [&](size_t i) {
        double best = 0;
        for (const Tokens& ref : set.items[i].references) {
          best = std::max(best,
                          MeteorAgainst(set.items[i].candidate, ref, params));
        }
        return best;
      });
  double sum = 0;
  for (double s : scores) sum += s;
  return sum / static_cast<double>(scores.size());
}

absl::StatusOr<double> Cider(const ScoredSet& set, int max_n,
                             std::optional<double> sigma, int jobs) {
  if (absl::Status s = Validate(set, "CIDEr"); !s.ok()) return s;
  if (absl::Status s = ValidateOrder(max_n, "CIDEr"); !s.ok()) return s;
  // Document frequency: the number of items whose references contain the
  // n-gram.
  std::unordered_map<std::string, int> df;
  for (const ScoredItem& item : set.items) {
    std::unordered_set<std::string> seen;
    for (const Tokens& ref : item.references) {
      for (int n = 1; n <= max_n; ++n) {
        for (size_t i = 0; i < NgramTotal(ref.size(), n); ++i) {
          seen.insert(NgramKey(ref, i, n));
        }
      }
    }
    for (const std::string& key : seen) ++df[key];
  }
  const double ref_len = std::log(static_cast<double>(set.items.size()));
  auto vectorize = [&](const Tokens& tokens) {
    CiderVector v;
    v.weights.resize(max_n);
    v.norms.assign(max_n, 0.0);
    for (int n = 1; n <= max_n; ++n) {
      const OrderedCounts counts = CountNgrams(tokens, n);
      for (const std::string& key : counts.keys) {
        const int tf = counts.counts.at(key);
        auto it = df.find(key);
        const double doc_freq =
            std::log(std::max(1.0, it == df.end() ? 0.0 : it->second * 1.0));
        const double w = tf * (ref_len - doc_freq);
        v.weights[n - 1][key] = w;
        v.norms[n - 1] += w * w;
        if (n == 2) v.length += tf;
      }
      v.norms[n - 1] = std::sqrt(v.norms[n - 1]);
    }
    return v;
  };
  std::vector<double> scores =
      ParallelMap(set.items.size(), jobs, [&](size_t i) {
        const ScoredItem& item = set.items[i];
        const CiderVector hyp = vectorize(item.candidate);
        std::vector<double> sum(max_n, 0.0);
        for (const Tokens& ref_tokens : item.references) {
          const CiderVector ref = vectorize(ref_tokens);
          const double delta = hyp.length - ref.length;
          for (int n = 0; n < max_n; ++n) {
            double val = 0;
            for (const auto& [key, w] : hyp.weights[n]) {
              auto it = ref.weights[n].find(key);
              if (it == ref.weights[n].end()) continue;
              val += std::min(w, it->second) * it->second;
            }
            if (hyp.norms[n] != 0 && ref.norms[n] != 0) {
              val /= hyp.norms[n] * ref.norms[n];
            }
            if (sigma) val *= std::exp(-(delta * delta) / (2 * *sigma * *sigma));
            sum[n] += val;
          }
        }
        double mean = 0;
        for (double v : sum) mean += v;
        mean /= max_n;
        return mean / static_cast<double>(item.references.size()) * 10.0;
      });
  double total = 0;
  for (double s : scores) total += s;
  return total / static_cast<double>(scores.size());
}

absl::StatusOr<MetricsReport> ScoreAll(const ScoredSet& set,
                                       std::span<const SerCounts> ser_counts,
                                       int jobs) {
  MetricsReport report;
  absl::StatusOr<double> bleu = Bleu(set, 4, jobs);
  if (!bleu.ok()) return bleu.status();
  report.bleu = *bleu;
  absl::StatusOr<double> nist = Nist(set, 5, jobs);
  if (!nist.ok()) return nist.status();
  report.nist = *nist;
  absl::StatusOr<double> meteor = MeteorExact(set, {}, jobs);
  if (!meteor.ok()) return meteor.status();
  report.meteor = *meteor;
  absl::StatusOr<double> rouge = RougeL(set, 1.2, jobs);
  if (!rouge.ok()) return rouge.status();
  report.rouge_l = *rouge;
  absl::StatusOr<double> cider = Cider(set, 4, 6.0, jobs);
  if (!cider.ok()) return cider.status();
  report.cider = *cider;
  absl::StatusOr<SerReport> ser = SerCorpus(ser_counts);
  if (!ser.ok()) return ser.status();
  report.ser = *std::move(ser);
  return report;
}

}  // namespace mrcheck
