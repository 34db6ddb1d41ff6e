#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace httplib {
class Client;
}

namespace fairtest {

// "http://host:port/prefix" split into the part httplib connects to and the
// path prefix prepended to every request.
struct Endpoint {
  std::string origin;
  std::string prefix;
};

// Throws ConfigError on a URL without scheme or host.
Endpoint parse_endpoint(std::string_view url);

std::unique_ptr<httplib::Client> make_client(const Endpoint& endpoint, double timeout_s);

}  // namespace fairtest
