#include <stdio.h>
#include "ncphase.h"

int main(void) {
    NcOrbit *orbit = NULL;
    if (nc_orbit_new("para-galilei+", "1", "1", "1", "1", &orbit) != NC_STATUS_OK) {
        char msg[256];
        nc_last_error_message(msg, sizeof msg);
        fprintf(stderr, "%s\n", msg);
        return 1;
    }
    double g = 0, f = 0;
    NcClass cls;
    nc_orbit_fields(orbit, &g, &f);
    nc_orbit_class(orbit, &cls);
    nc_orbit_free(orbit);
    printf("%g %g %d\n", g, f, (int)cls);
    return (g == 0.0 && f == -1.0 && cls == NC_CLASS_MOMENTUM_NC) ? 0 : 2;
}
