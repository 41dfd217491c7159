#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fibcat/functor.hpp"
#include "fibcat/indexed.hpp"

namespace fibcat::builders {

/// One object `*`, one morphism `id_*`.
CategoryPtr terminal_category();
/// a --u--> b.
CategoryPtr walking_arrow();
/// a --i--> b --j--> a, mutually inverse.
CategoryPtr walking_isomorphism();
/// a ==s,t==> b.
CategoryPtr parallel_pair();
/// Objects named as given, identities only.
CategoryPtr discrete(const std::vector<std::string>& objects);

/// Skeleton of finite sets {S0, ..., S<max>} with all functions. A function
/// S_a → S_b is named `id<a>` or `f<a><b>[_<images>]`.
CategoryPtr finite_sets(int max_size);

/// Full subcategory of the arrow category on the morphisms accepted by
/// `keep`, with its codomain functor.
struct ArrowCategory {
  CategoryPtr category;
  Functor codomain;
  std::vector<MorId> arrow_of_object;                // object → base morphism
  std::vector<std::pair<MorId, MorId>> square;       // morphism → (top, bottom)
};
ArrowCategory arrow_category(const CategoryPtr& base, const std::function<bool(MorId)>& keep);

bool is_monomorphism(const Category& cat, MorId f);

struct Generator {
  std::string name;
  std::string src;
  std::string dst;
};
struct Composite {
  std::string g;
  std::string f;
  std::string result;
};

/// Identities `id_<object>` and their composites are added automatically;
/// `composites` lists the remaining entries of the table.
CategoryPtr small_category(const std::vector<std::string>& objects,
                           const std::vector<Generator>& morphisms,
                           const std::vector<Composite>& composites = {});

/// Name-based functor; an unlisted identity goes to the identity of its
/// object's image.
Functor functor_by_name(const CategoryPtr& src, const CategoryPtr& tgt,
                        const std::vector<std::pair<std::string, std::string>>& objects,
                        const std::vector<std::pair<std::string, std::string>>& morphisms);

/// Base b0 --u--> b1; E(b0) = e0 --a--> e1, E(b1) = {*}; u* picks e1.
IndexedCategory arrow_indexed();

/// Base b0 ==u,v==> b1 --w--> b2; E(b0) = e0 --a--> e1, E(b1) = x0 --c--> x1,
/// E(b2) = {*}. u* is the isomorphism of fibers, v* is constant at e1 and w*
/// picks x1.
IndexedCategory fork_indexed();

/// Every fiber the terminal category.
IndexedCategory constant_terminal(const CategoryPtr& base);

}  // namespace fibcat::builders
