#pragma once

#include <map>
#include <string>

#include "json.hpp"

namespace gcn {

// Embedded copies of the schemas shipped under schemas/. The unit suite
// checks the two stay in sync; emitted JSON is validated against these.

inline const char* kProfileSchema = R"json({
  "type": "object",
  "required": ["r", "per_vertex", "wcol", "col", "adm_lower", "adm_upper"],
  "properties": {
    "r": {"type": "integer", "minimum": 0},
    "per_vertex": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["v", "wreach", "sreach", "adm_lower", "adm_upper"],
        "properties": {
          "v": {"type": "integer", "minimum": 0},
          "wreach": {"type": "integer", "minimum": 0},
          "sreach": {"type": "integer", "minimum": 0},
          "adm_lower": {"type": "integer", "minimum": 0},
          "adm_upper": {"type": "integer", "minimum": 0},
          "adm_exact": {"type": "boolean"}
        }
      }
    },
    "wcol": {"type": "integer", "minimum": 0},
    "col": {"type": "integer", "minimum": 0},
    "adm_lower": {"type": "integer", "minimum": 0},
    "adm_upper": {"type": "integer", "minimum": 0},
    "adm_exact": {"type": "boolean"}
  }
})json";

inline const char* kOracleSchema = R"json({
  "type": "object",
  "required": ["metric", "r", "value", "witness"],
  "properties": {
    "metric": {"enum": ["wcol", "col", "adm"]},
    "r": {"type": "integer", "minimum": 0},
    "value": {"type": "integer", "minimum": 0},
    "witness": {"type": "array", "items": {"type": "integer", "minimum": 0}}
  }
})json";

inline const char* kScatterSchema = R"json({
  "type": "object",
  "required": ["r", "m", "c", "S", "B", "iterations"],
  "properties": {
    "r": {"type": "integer", "minimum": 0},
    "m": {"type": "integer", "minimum": 0},
    "c": {"type": "integer", "minimum": 0},
    "a_size": {"type": "integer", "minimum": 0},
    "initial_independent": {"type": "array", "items": {"type": "integer", "minimum": 0}},
    "S": {"type": "array", "items": {"type": "integer", "minimum": 0}},
    "B": {"type": "array", "items": {"type": "integer", "minimum": 0}},
    "iterations": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["pivot", "case", "sizes"],
        "properties": {
          "pivot": {"type": "integer", "minimum": 0},
          "case": {"enum": [1, 2]},
          "sizes": {
            "type": "object",
            "required": ["reached", "independent_after", "deleted_added"]
          }
        }
      }
    },
    "case2_count": {"type": "integer", "minimum": 0},
    "h_max_back_degree": {"type": "integer", "minimum": 0},
    "h_degeneracy": {"type": "integer", "minimum": 0},
    "audit": {
      "type": "object",
      "required": ["ok"],
      "properties": {
        "ok": {"type": "boolean"},
        "violation": {"type": "string"},
        "pairwise_gt_2r": {"type": "boolean"},
        "min_pairwise_distance": {"type": "integer", "minimum": -1}
      }
    }
  }
})json";

inline const char* kTranscriptSchema = R"json({
  "type": "object",
  "required": ["r", "order_file", "rounds", "winner", "rounds_used"],
  "properties": {
    "r": {"type": "integer", "minimum": 0},
    "order_file": {"type": "string"},
    "round_cap": {"type": "integer", "minimum": 0},
    "rounds": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["v", "w", "arena_size"],
        "properties": {
          "v": {"type": "integer", "minimum": 0},
          "w": {"type": "integer", "minimum": 0},
          "arena_size": {"type": "integer", "minimum": 0}
        }
      }
    },
    "winner": {"enum": ["splitter", "connector"]},
    "rounds_used": {"type": "integer", "minimum": 0}
  }
})json";

inline const char* kTraceSchema = R"json({
  "type": "object",
  "required": ["order", "trace"],
  "properties": {
    "order": {"type": "array", "items": {"type": "integer", "minimum": 0}},
    "trace": {
      "type": "object",
      "required": ["variant", "fragments", "steps"],
      "properties": {
        "variant": {"enum": ["plain", "successor"]},
        "fragments": {
          "type": "array",
          "items": {
            "type": "object",
            "required": ["index", "vertices", "tree_edges", "root"],
            "properties": {
              "index": {"type": "integer", "minimum": 0},
              "vertices": {"type": "array", "items": {"type": "integer", "minimum": 0}},
              "tree_edges": {"type": "array"},
              "root": {"type": "integer", "minimum": 0},
              "entry": {"type": "integer", "minimum": -1},
              "anchor": {"type": "integer", "minimum": -1}
            }
          }
        },
        "steps": {
          "type": "array",
          "items": {
            "type": "object",
            "required": ["component", "connected", "root", "m"],
            "properties": {
              "component": {"type": "array", "items": {"type": "integer", "minimum": 0}},
              "connected": {"type": "array", "items": {"type": "integer", "minimum": 0}},
              "root": {"type": "integer", "minimum": 0},
              "m": {"type": "integer", "minimum": 0}
            }
          }
        }
      }
    }
  }
})json";

inline const char* kSpanningSchema = R"json({
  "type": "object",
  "required": ["root", "parent"],
  "properties": {
    "root": {"type": "integer", "minimum": 0},
    "parent": {"type": "array", "items": {"type": "integer", "minimum": -1}}
  }
})json";

inline const char* kChargesSchema = R"json({
  "type": "object",
  "required": ["n", "entries"],
  "properties": {
    "n": {"type": "integer", "minimum": 0},
    "entries": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["w", "charged"],
        "properties": {
          "w": {"type": "integer", "minimum": 0},
          "charged": {"type": "array", "items": {"type": "integer", "minimum": 0}}
        }
      }
    }
  }
})json";

inline const char* kClaimsSchema = R"json({
  "type": "object",
  "required": ["r", "ok", "tree_ok", "charge_ok", "degree_ok", "adm_ok",
               "adm_h_upper", "col_2r_g", "adm_budget"],
  "properties": {
    "r": {"type": "integer", "minimum": 0},
    "ok": {"type": "boolean"},
    "violation": {"type": "string"},
    "tree_ok": {"type": "boolean"},
    "charge_ok": {"type": "boolean"},
    "degree_ok": {"type": "boolean"},
    "adm_ok": {"type": "boolean"},
    "max_spanning_degree": {"type": "integer", "minimum": 0},
    "max_fragment_degree": {"type": "integer", "minimum": 0},
    "adm_h_upper": {"type": "integer", "minimum": 0},
    "adm_h_exact": {"type": "boolean"},
    "col_2r_g": {"type": "integer", "minimum": 0},
    "adm_budget": {"type": "integer", "minimum": 0}
  }
})json";

inline const char* kReportSchema = R"json({
  "type": "object",
  "required": ["criteria", "all_pass"],
  "properties": {
    "criteria": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["id", "name", "pass", "details"],
        "properties": {
          "id": {"type": "integer", "minimum": 1},
          "name": {"type": "string"},
          "pass": {"type": "boolean"},
          "details": {"type": "string"},
          "seconds": {"type": "number", "minimum": 0}
        }
      }
    },
    "all_pass": {"type": "boolean"}
  }
})json";

inline const std::map<std::string, const char*>& schema_registry() {
  static const std::map<std::string, const char*> reg = {
      {"profile", kProfileSchema},   {"oracle", kOracleSchema},
      {"scatter", kScatterSchema},   {"transcript", kTranscriptSchema},
      {"trace", kTraceSchema},       {"spanning", kSpanningSchema},
      {"charges", kChargesSchema},   {"claims", kClaimsSchema},
      {"report", kReportSchema},
  };
  return reg;
}

inline nlohmann::json schema_by_name(const std::string& name) {
  return nlohmann::json::parse(schema_registry().at(name));
}

}  // namespace gcn
