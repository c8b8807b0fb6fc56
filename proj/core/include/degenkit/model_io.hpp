#pragma once

// Model file format:
//
//   kind = snc-model          # optional
//   generic_dim = 1
//   family = k3               # optional: generic | k3
//
//   [components]
//   1 = 1 + L
//   2 = 1 + L
//
//   [multiplicities]          # optional, default 1
//   1 = 1
//
//   [strata]                  # comma-joined ids; missing keys mean empty
//   1,2 = 1
//   1,3 = empty

#include <string>
#include <string_view>

#include "degenkit/keyvalue.hpp"
#include "degenkit/snc_model.hpp"

namespace degenkit {

enum class ModelKind { Snc, KulikovII, KulikovIII };

/// Reads the `kind` header (default snc-model); throws Error(Parse) on unknown kinds.
ModelKind model_kind(const kv::Document& doc);

struct ModelFile {
  SncModel model;
  bool k3_family = false;
};

ModelFile parse_model(const kv::Document& doc);
ModelFile parse_model(std::string_view text);

/// Canonical serialization; parse_model(write_model(m)).model == m.
std::string write_model(const SncModel& model, bool k3_family = false);

}  // namespace degenkit
