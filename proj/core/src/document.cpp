#include "kodaira/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "kodaira/errors.hpp"

namespace kodaira {
namespace {

using ojson = nlohmann::ordered_json;

constexpr std::int64_t kFormatVersion = 1;

[[noreturn]] void fail(const std::string& message) {
  throw SchemaError(message);
}

void require_object(const ojson& j, const std::string& where) {
  if (!j.is_object()) fail(where + " must be a JSON object");
}

void reject_unknown_fields(const ojson& j, const std::set<std::string>& allowed,
                           const std::string& where) {
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key())) {
      fail("unknown field \"" + item.key() + "\" in " + where);
    }
  }
}

const ojson& require_field(const ojson& j, const std::string& key,
                           const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) fail(where + " is missing required field \"" + key + "\"");
  return *it;
}

std::int64_t get_int(const ojson& j, const std::string& key,
                     const std::string& where) {
  const ojson& v = require_field(j, key, where);
  if (!v.is_number_integer()) {
    fail("field \"" + key + "\" in " + where + " must be an integer");
  }
  return v.get<std::int64_t>();
}

std::size_t get_size(const ojson& j, const std::string& key,
                     const std::string& where) {
  const std::int64_t v = get_int(j, key, where);
  if (v < 0) fail("field \"" + key + "\" in " + where + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

bool get_bool_or(const ojson& j, const std::string& key, bool fallback,
                 const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_boolean()) {
    fail("field \"" + key + "\" in " + where + " must be a boolean");
  }
  return it->get<bool>();
}

std::string get_string(const ojson& j, const std::string& key,
                       const std::string& where) {
  const ojson& v = require_field(j, key, where);
  if (!v.is_string()) {
    fail("field \"" + key + "\" in " + where + " must be a string");
  }
  return v.get<std::string>();
}

std::optional<std::int64_t> get_signature(const ojson& j,
                                          const std::string& where) {
  auto it = j.find("signature");
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_number_integer()) {
    fail("field \"signature\" in " + where + " must be an integer or null");
  }
  return it->get<std::int64_t>();
}

RankParity parity_from_string(const std::string& s, const std::string& where) {
  if (s == "even") return RankParity::even;
  if (s == "odd") return RankParity::odd;
  if (s == "unknown") return RankParity::unknown;
  fail("field \"rank_parity\" in " + where +
       " must be \"even\", \"odd\", or \"unknown\"");
}

RankParity get_parity_or_unknown(const ojson& j, const std::string& where) {
  auto it = j.find("rank_parity");
  if (it == j.end()) return RankParity::unknown;
  if (!it->is_string()) {
    fail("field \"rank_parity\" in " + where + " must be a string");
  }
  return parity_from_string(it->get<std::string>(), where);
}

// Matrix entries are integers; values outside int64 travel as decimal
// strings so nothing is ever rounded through a double.
mpz_class entry_from_json(const ojson& v, const std::string& where) {
  if (v.is_number_integer()) {
    return mpz_class(static_cast<long>(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    try {
      return mpz_class(s, 10);
    } catch (const std::invalid_argument&) {
      fail("matrix entry \"" + s + "\" in " + where +
           " is not a decimal integer");
    }
  }
  fail("matrix entries in " + where +
       " must be integers (or decimal strings for very large values)");
}

ojson entry_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return ojson(static_cast<std::int64_t>(v.get_si()));
  return ojson(v.get_str());
}

IntMatrix matrix_from_json(const ojson& j, const std::string& where) {
  if (!j.is_array()) fail("matrix in " + where + " must be an array of rows");
  std::vector<std::vector<mpz_class>> rows;
  rows.reserve(j.size());
  for (const ojson& row : j) {
    if (!row.is_array()) {
      fail("matrix row in " + where + " must be an array");
    }
    std::vector<mpz_class> entries;
    entries.reserve(row.size());
    for (const ojson& v : row) entries.push_back(entry_from_json(v, where));
    rows.push_back(std::move(entries));
  }
  return IntMatrix::from_rows(rows);
}

ojson matrix_to_json(const IntMatrix& m) {
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(entry_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<IntMatrix> images_from_json(const ojson& j,
                                        const std::string& where) {
  const ojson& arr = require_field(j, "images", where);
  if (!arr.is_array()) fail("field \"images\" in " + where + " must be an array");
  std::vector<IntMatrix> out;
  out.reserve(arr.size());
  for (const ojson& m : arr) out.push_back(matrix_from_json(m, where));
  return out;
}

ojson images_to_json(const std::vector<IntMatrix>& images) {
  ojson arr = ojson::array();
  for (const IntMatrix& m : images) arr.push_back(matrix_to_json(m));
  return arr;
}

// --- content payloads -----------------------------------------------------

SymplecticRep rep_from_json(const ojson& j, const std::string& where) {
  SymplecticRep rep;
  rep.fiber_genus = get_size(j, "fiber_genus", where);
  rep.base_genus = get_size(j, "base_genus", where);
  rep.images = images_from_json(j, where);
  return rep;
}

DeclaredBlock declared_from_json(const ojson& j, const std::string& where) {
  DeclaredBlock block;
  block.fiber_genus = get_size(j, "fiber_genus", where);
  block.base_genus = get_size(j, "base_genus", where);
  block.coinv_rank_lo = get_size(j, "coinv_rank_lo", where);
  block.coinv_rank_hi = get_size(j, "coinv_rank_hi", where);
  block.rank_parity = get_parity_or_unknown(j, where);
  return block;
}

void rep_to_json(ojson& j, const SymplecticRep& rep,
                 std::optional<std::int64_t> signature, bool zero_section) {
  j["fiber_genus"] = rep.fiber_genus;
  j["base_genus"] = rep.base_genus;
  j["images"] = images_to_json(rep.images);
  j["signature"] = signature ? ojson(*signature) : ojson(nullptr);
  j["has_zero_section"] = zero_section;
}

void declared_to_json(ojson& j, const DeclaredBlock& block,
                      std::optional<std::int64_t> signature,
                      bool zero_section) {
  j["fiber_genus"] = block.fiber_genus;
  j["base_genus"] = block.base_genus;
  j["coinv_rank_lo"] = block.coinv_rank_lo;
  j["coinv_rank_hi"] = block.coinv_rank_hi;
  j["rank_parity"] = to_string(block.rank_parity);
  j["signature"] = signature ? ojson(*signature) : ojson(nullptr);
  j["has_zero_section"] = zero_section;
}

// --- construction nodes -----------------------------------------------------

ProvenanceNode node_from_json(const ojson& j, const std::string& where);

std::vector<ProvenanceNode> children_from_json(const ojson& j,
                                               std::size_t expected,
                                               const std::string& where) {
  const ojson& arr = require_field(j, "children", where);
  if (!arr.is_array() || arr.size() != expected) {
    fail("field \"children\" in " + where + " must be an array of " +
         std::to_string(expected) + " node(s)");
  }
  std::vector<ProvenanceNode> out;
  out.reserve(expected);
  std::size_t index = 0;
  for (const ojson& c : arr) {
    out.push_back(node_from_json(c, where + ".children[" +
                                        std::to_string(index++) + "]"));
  }
  return out;
}

ProvenanceNode node_from_json(const ojson& j, const std::string& where) {
  require_object(j, where);
  ProvenanceNode node;
  node.op = get_string(j, "op", where);
  const std::string at = where + " (op \"" + node.op + "\")";

  if (node.op == "explicit") {
    reject_unknown_fields(j,
                          {"op", "fiber_genus", "base_genus", "images",
                           "signature", "has_zero_section"},
                          at);
    node.rep = rep_from_json(j, at);
    node.leaf_signature = get_signature(j, at);
    node.leaf_has_zero_section = get_bool_or(j, "has_zero_section", false, at);
  } else if (node.op == "declared") {
    reject_unknown_fields(
        j,
        {"op", "fiber_genus", "base_genus", "coinv_rank_lo", "coinv_rank_hi",
         "rank_parity", "signature", "has_zero_section"},
        at);
    node.block = declared_from_json(j, at);
    node.leaf_signature = get_signature(j, at);
    node.leaf_has_zero_section = get_bool_or(j, "has_zero_section", false, at);
  } else if (node.op == "product") {
    reject_unknown_fields(j, {"op", "g", "b"}, at);
    node.args["g"] = static_cast<std::int64_t>(get_size(j, "g", at));
    node.args["b"] = static_cast<std::int64_t>(get_size(j, "b", at));
  } else if (node.op == "trefoil" || node.op == "kodaira_thurston") {
    reject_unknown_fields(j, {"op", "b"}, at);
    node.args["b"] = static_cast<std::int64_t>(get_size(j, "b", at));
  } else if (node.op == "ekkos") {
    reject_unknown_fields(j, {"op"}, at);
  } else if (node.op == "section_sum") {
    reject_unknown_fields(j, {"op", "children"}, at);
    node.children = children_from_json(j, 2, at);
  } else if (node.op == "fiber_sum_product") {
    reject_unknown_fields(j, {"op", "added_base_genus", "children"}, at);
    node.args["added_base_genus"] =
        static_cast<std::int64_t>(get_size(j, "added_base_genus", at));
    node.children = children_from_json(j, 1, at);
  } else if (node.op == "cover") {
    reject_unknown_fields(j, {"op", "degree", "images", "twist_generator",
                              "children"},
                          at);
    node.args["degree"] = static_cast<std::int64_t>(get_size(j, "degree", at));
    const bool has_images = j.contains("images");
    const bool has_twist = j.contains("twist_generator");
    if (has_images == has_twist) {
      fail(at + " needs exactly one of \"images\" or \"twist_generator\"");
    }
    if (has_images) {
      const ojson& arr = j["images"];
      if (!arr.is_array()) fail("field \"images\" in " + at + " must be an array");
      for (const ojson& v : arr) {
        if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
          fail("cover images in " + at + " must be nonnegative integers");
        }
        node.cover_images.push_back(v.get<std::size_t>());
      }
    } else {
      node.args["twist_generator"] =
          static_cast<std::int64_t>(get_size(j, "twist_generator", at));
    }
    node.children = children_from_json(j, 1, at);
  } else if (node.op == "assume_rank_parity") {
    reject_unknown_fields(j, {"op", "parity", "children"}, at);
    node.parity = parity_from_string(get_string(j, "parity", at), at);
    if (node.parity == RankParity::unknown) {
      fail("field \"parity\" in " + at + " must be \"even\" or \"odd\"");
    }
    node.children = children_from_json(j, 1, at);
  } else {
    fail("unknown construction op \"" + node.op + "\" in " + where);
  }
  return node;
}

ojson node_to_json(const ProvenanceNode& node) {
  ojson j;
  j["op"] = node.op;
  if (node.op == "explicit") {
    rep_to_json(j, *node.rep, node.leaf_signature, node.leaf_has_zero_section);
  } else if (node.op == "declared") {
    declared_to_json(j, *node.block, node.leaf_signature,
                     node.leaf_has_zero_section);
  } else if (node.op == "product") {
    j["g"] = node.args.at("g");
    j["b"] = node.args.at("b");
  } else if (node.op == "trefoil" || node.op == "kodaira_thurston") {
    j["b"] = node.args.at("b");
  } else if (node.op == "fiber_sum_product") {
    j["added_base_genus"] = node.args.at("added_base_genus");
  } else if (node.op == "cover") {
    j["degree"] = node.args.at("degree");
    if (node.args.count("twist_generator")) {
      j["twist_generator"] = node.args.at("twist_generator");
    } else {
      j["images"] = node.cover_images;
    }
  } else if (node.op == "assume_rank_parity") {
    j["parity"] = to_string(node.parity);
  }
  if (!node.children.empty()) {
    ojson arr = ojson::array();
    for (const ProvenanceNode& c : node.children) arr.push_back(node_to_json(c));
    j["children"] = std::move(arr);
  }
  return j;
}

BundleSpec eval_node(const ProvenanceNode& node) {
  if (node.op == "explicit") {
    return from_rep(*node.rep, node.leaf_signature,
                    node.leaf_has_zero_section);
  }
  if (node.op == "declared") {
    return from_declared(*node.block, node.leaf_signature,
                         node.leaf_has_zero_section);
  }
  if (node.op == "product") {
    return product_block(static_cast<std::size_t>(node.args.at("g")),
                         static_cast<std::size_t>(node.args.at("b")));
  }
  if (node.op == "trefoil") {
    return trefoil_block(static_cast<std::size_t>(node.args.at("b")));
  }
  if (node.op == "kodaira_thurston") {
    return kodaira_thurston_block(static_cast<std::size_t>(node.args.at("b")));
  }
  if (node.op == "ekkos") return ekkos_block();
  if (node.op == "section_sum") {
    return section_sum(eval_node(node.children.at(0)),
                       eval_node(node.children.at(1)));
  }
  if (node.op == "fiber_sum_product") {
    return fiber_sum_with_product(
        eval_node(node.children.at(0)),
        static_cast<std::size_t>(node.args.at("added_base_genus")));
  }
  if (node.op == "cover") {
    BundleSpec child = eval_node(node.children.at(0));
    CyclicCoverSpec spec;
    spec.degree = static_cast<std::size_t>(node.args.at("degree"));
    if (node.args.count("twist_generator")) {
      spec = twist_single_generator(
          spec.degree,
          static_cast<std::size_t>(node.args.at("twist_generator")),
          2 * child.base_genus());
    } else {
      spec.images = node.cover_images;
    }
    return restrict_to_cover(child, spec);
  }
  if (node.op == "assume_rank_parity") {
    return assume_rank_parity(eval_node(node.children.at(0)), node.parity);
  }
  fail("unknown construction op \"" + node.op + "\"");
}

}  // namespace

BundleSpec parse_bundle_document(const std::string& json_text,
                                 bool validate_leaves) {
  ojson doc;
  try {
    doc = ojson::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(std::string("document is not valid JSON: ") + e.what());
  }
  require_object(doc, "document");
  if (get_int(doc, "format", "document") != kFormatVersion) {
    fail("unsupported document format version");
  }
  const std::string kind = get_string(doc, "kind", "document");

  if (kind == "explicit") {
    reject_unknown_fields(doc,
                          {"format", "kind", "fiber_genus", "base_genus",
                           "images", "signature", "has_zero_section"},
                          "document");
    SymplecticRep rep = rep_from_json(doc, "document");
    const auto signature = get_signature(doc, "document");
    const bool zs = get_bool_or(doc, "has_zero_section", false, "document");
    return validate_leaves
               ? from_rep(std::move(rep), signature, zs)
               : from_rep_unchecked(std::move(rep), signature, zs);
  }
  if (kind == "declared") {
    reject_unknown_fields(
        doc,
        {"format", "kind", "fiber_genus", "base_genus", "coinv_rank_lo",
         "coinv_rank_hi", "rank_parity", "signature", "has_zero_section"},
        "document");
    DeclaredBlock block = declared_from_json(doc, "document");
    return from_declared(std::move(block), get_signature(doc, "document"),
                         get_bool_or(doc, "has_zero_section", false,
                                     "document"));
  }
  if (kind == "generating_set") {
    reject_unknown_fields(
        doc,
        {"format", "kind", "fiber_genus", "base_genus", "images", "origin",
         "inherited_valid", "signature", "has_zero_section", "provenance"},
        "document");
    GeneratingSetRep rep;
    rep.fiber_genus = get_size(doc, "fiber_genus", "document");
    rep.base_genus = get_size(doc, "base_genus", "document");
    rep.images = images_from_json(doc, "document");
    rep.origin = get_string(doc, "origin", "document");
    rep.inherited_valid =
        get_bool_or(doc, "inherited_valid", false, "document");
    const auto signature = get_signature(doc, "document");
    const bool zs = get_bool_or(doc, "has_zero_section", false, "document");
    BundleSpec bundle =
        validate_leaves
            ? from_generating_set(std::move(rep), signature, zs)
            : from_generating_set_unchecked(std::move(rep), signature, zs);
    if (doc.contains("provenance")) {
      ProvenanceNode node =
          node_from_json(doc["provenance"], "document.provenance");
      return BundleSpec(bundle.content(), signature, zs, std::move(node));
    }
    return bundle;
  }
  if (kind == "construction") {
    reject_unknown_fields(doc, {"format", "kind", "root"}, "document");
    const ProvenanceNode root =
        node_from_json(require_field(doc, "root", "document"),
                       "document.root");
    return eval_node(root);
  }
  fail("unknown document kind \"" + kind + "\"");
}

BundleSpec load_bundle_document(const std::string& path,
                                bool validate_leaves) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot read document file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_bundle_document(buffer.str(), validate_leaves);
}

namespace {

bool is_leaf_provenance(const ProvenanceNode& node) {
  return node.op == "explicit" || node.op == "declared" ||
         node.op == "generating_set";
}

}  // namespace

std::string serialize_bundle(const BundleSpec& bundle) {
  ojson doc;
  doc["format"] = kFormatVersion;
  if (bundle.is_generating_set()) {
    const GeneratingSetRep& rep = bundle.generating_set();
    doc["kind"] = "generating_set";
    doc["fiber_genus"] = rep.fiber_genus;
    doc["base_genus"] = rep.base_genus;
    doc["images"] = images_to_json(rep.images);
    doc["origin"] = rep.origin;
    doc["inherited_valid"] = rep.inherited_valid;
    doc["signature"] = bundle.signature() ? ojson(*bundle.signature())
                                          : ojson(nullptr);
    doc["has_zero_section"] = bundle.has_zero_section();
    if (!is_leaf_provenance(bundle.provenance())) {
      doc["provenance"] = node_to_json(bundle.provenance());
    }
  } else if (!is_leaf_provenance(bundle.provenance())) {
    doc["kind"] = "construction";
    doc["root"] = node_to_json(bundle.provenance());
  } else if (bundle.is_explicit()) {
    doc["kind"] = "explicit";
    rep_to_json(doc, bundle.rep(), bundle.signature(),
                bundle.has_zero_section());
  } else {
    doc["kind"] = "declared";
    declared_to_json(doc, bundle.declared(), bundle.signature(),
                     bundle.has_zero_section());
  }
  return doc.dump(2) + "\n";
}

void save_bundle_document(const BundleSpec& bundle, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write document file: " + path);
  out << serialize_bundle(bundle);
  if (!out.good()) throw Error("failed while writing document file: " + path);
}

}  // namespace kodaira
