#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace slenderlab::cli {

  using Json = nlohmann::ordered_json;

  struct Record {
    std::string name;
    Json        expected;
    Json        actual;
    bool        pass = false;
  };

  //! One run of a subcommand. Serialized with a fixed key order so repeated
  //! runs diff cleanly.
  struct Report {
    std::string         command;
    std::uint64_t       seed = 1;
    Json                parameters = Json::object();
    std::vector<Record> records;
    Json                notes = Json::object();

    void add(std::string name, Json expected, Json actual, bool pass) {
      records.push_back({std::move(name), std::move(expected), std::move(actual), pass});
    }

    //! Informational value: always passes, expected is null.
    void info(std::string name, Json actual) { add(std::move(name), nullptr, std::move(actual), true); }

    void append(Report const& other) {
      records.insert(records.end(), other.records.begin(), other.records.end());
      for (auto const& [k, v] : other.notes.items()) {
        notes[k] = v;
      }
    }

    [[nodiscard]] bool pass() const {
      for (auto const& r : records) {
        if (!r.pass) {
          return false;
        }
      }
      return true;
    }

    [[nodiscard]] Json to_json() const {
      Json j;
      j["command"]    = command;
      j["seed"]       = seed;
      j["parameters"] = parameters;
      Json recs       = Json::array();
      for (auto const& r : records) {
        Json o;
        o["name"]     = r.name;
        o["expected"] = r.expected;
        o["actual"]   = r.actual;
        o["pass"]     = r.pass;
        recs.push_back(std::move(o));
      }
      j["records"] = std::move(recs);
      if (!notes.empty()) {
        j["notes"] = notes;
      }
      j["pass"] = pass();
      return j;
    }
  };

}  // namespace slenderlab::cli
