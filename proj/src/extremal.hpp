#pragma once

#include <string>
#include <vector>

#include "linking.hpp"
#include "word.hpp"

namespace curvesi {

enum class Surface { Torus, Pants };

Surface surface_from_name(const std::string& name);
const SurfaceOrder& surface_order(Surface s);

/// Maximal SI over primitive classes of length L.
/// Torus: (L-2)^2/4 even, (L-1)(L-3)/4 odd. Pants: validated for L <= 15;
/// beyond that UnvalidatedLength unless force is set.
long long max_si(int length, Surface surface, bool force = false);

/// All distinct canonical torus words of length L >= 4 attaining max_si.
std::vector<CyclicWord> maximal_words(int length);

/// (L-2)^2+4 even, 2(L-1)(L-3)+8 odd.
long long count_maximal(int length);

/// All distinct canonical torus words of length L >= 4 attaining max_si - 1.
std::vector<CyclicWord> submaximal_words(int length);

/// (L-1)(L-3) odd, 5(L-2)^2/2 even.
long long count_submaximal(int length);

/// Least L whose maximal SI reaches k: the smallest integer >= 2*sqrt(k)+2.
int min_length_for_si(long long k);

struct ClosedForm {
  long long value;
  bool exact;
};

/// Closed-form SI for the one/two/three block-pair shapes:
///   r^i s^j                 -> (i-1)(j-1)
///   r^i s^j r^k s^l         -> (i+k-2)(j+l-2)+|i-k|+|j-l|-1, or the bound
///                              (i+k-2)(j+l-2)+1 when i=k, j=l (exact 1 when
///                              additionally i=1 or j=1)
///   r^i s^j r^k S^l         -> (i+k-1)(j+l-1)
///   r^i s^j R^k S^l         -> (i+k-1)(j+l-1)-1
///   r^i s^j r^k s^l r^m S^n -> (i+k+m-1)(j+l+n-1)-2(k+min(j,l)-1)
/// Throws UnknownShape when the word matches none of them.
ClosedForm closed_form_si(const CyclicWord& w);

/// Closed-form IN for (⟨r^i s^j⟩, ⟨r^m S^n⟩) -> in+mj and
/// (⟨r^i s^j r^k s^l⟩, ⟨r^m S^n⟩) -> (i+k)n+m(j+l).
long long closed_form_in(const CyclicWord& v, const CyclicWord& w);

enum class BoundKind { General, BlockPair, Length };

const char* bound_kind_name(BoundKind k);

struct BoundReport {
  CyclicWord word;
  long long si;
  long long bound;
  long long slack;
  BoundKind kind;
  bool pure_power_exception;  // SI(r^L) = L-1 exceeds the length bound for 2 <= L <= 6
};

/// Exact SI on the torus with the tightest applicable upper bound; requires
/// the word to be primitive or a pure power.
BoundReport bound_report(const CyclicWord& w);

}  // namespace curvesi
