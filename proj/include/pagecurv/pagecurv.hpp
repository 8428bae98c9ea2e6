#pragma once

#include "pagecurv/bundled_metrics.hpp"
#include "pagecurv/calibration_metrics.hpp"
#include "pagecurv/certify.hpp"
#include "pagecurv/conventions.hpp"
#include "pagecurv/curvature.hpp"
#include "pagecurv/einstein.hpp"
#include "pagecurv/gauss_bonnet.hpp"
#include "pagecurv/interval.hpp"
#include "pagecurv/jet.hpp"
#include "pagecurv/metric.hpp"
#include "pagecurv/page.hpp"
#include "pagecurv/profile_expr.hpp"
#include "pagecurv/scan.hpp"
#include "pagecurv/sectional_search.hpp"
#include "pagecurv/sym3_eigen.hpp"
#include "pagecurv/weyl.hpp"
