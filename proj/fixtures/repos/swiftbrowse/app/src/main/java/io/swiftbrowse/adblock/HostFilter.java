package io.swiftbrowse.adblock;

import java.io.BufferedReader;
import java.io.IOException;
import java.io.Reader;
import java.util.HashSet;
import java.util.Set;

public final class HostFilter {
    private static final HostFilter INSTANCE = new HostFilter();
    private final Set<String> blockedHosts = new HashSet<>();

    public static HostFilter getInstance() {
        return INSTANCE;
    }

    public void loadHostsFile(Reader source) throws IOException {
        BufferedReader reader = new BufferedReader(source);
        String line;
        while ((line = reader.readLine()) != null) {
            line = line.trim();
            if (line.isEmpty() || line.startsWith("#")) continue;
            String[] parts = line.split("\\s+");
            if (parts.length >= 2) blockedHosts.add(parts[1]);
        }
    }

    public boolean isBlocked(String host) {
        return blockedHosts.contains(host);
    }
}
