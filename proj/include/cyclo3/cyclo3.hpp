#pragma once

#include "cyclo3/bigint.hpp"
#include "cyclo3/errors.hpp"
#include "cyclo3/gf2x.hpp"
#include "cyclo3/binfield.hpp"
#include "cyclo3/tower.hpp"
#include "cyclo3/zmring.hpp"
#include "cyclo3/cycpart.hpp"
#include "cyclo3/identities.hpp"
#include "cyclo3/cyclotomic.hpp"
#include "cyclo3/charsum.hpp"
#include "cyclo3/matrix.hpp"
#include "cyclo3/scheme.hpp"
#include "cyclo3/paperbook.hpp"
#include "cyclo3/catalog.hpp"
