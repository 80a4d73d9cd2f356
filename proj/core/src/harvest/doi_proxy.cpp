#include <json.hpp>

#include "asneval/errors.hpp"
#include "asneval/harvest/clients.hpp"
#include "asneval/util.hpp"

namespace asneval {

ResolutionStatus DoiProxyClient::resolve(const Doi& doi) {
    try {
        auto result = api_.fetch("/api/handles/" + encode_path_segments(doi.str()));
        if (result.status == 404) return ResolutionStatus::not_found();
        if (result.status != 200) {
            return ResolutionStatus::transient("proxy returned status " +
                                               std::to_string(result.status));
        }
        nlohmann::json j = nlohmann::json::parse(result.body, nullptr, false);
        if (j.is_discarded()) {
            return ResolutionStatus::transient("unparseable proxy response");
        }
        int code = j.value("responseCode", -1);
        // 1 = handle with values, 200 = registered handle without values
        if (code == 1 || code == 200) return ResolutionStatus::resolves();
        if (code == 100) return ResolutionStatus::not_found();
        return ResolutionStatus::transient("proxy responseCode " + std::to_string(code));
    } catch (const NetworkError& e) {
        return ResolutionStatus::transient(e.what());
    } catch (const EndpointError& e) {
        return ResolutionStatus::transient(e.what());
    }
}

}  // namespace asneval
