package io.swiftbrowse.tabs;

import android.webkit.WebView;

public class BrowserTab {
    private final WebView webView;
    private final boolean incognito;

    BrowserTab(WebView webView, boolean incognito) {
        this.webView = webView;
        this.incognito = incognito;
    }

    public WebView getWebView() { return webView; }
    public boolean isIncognito() { return incognito; }
    public String getUrl() { return webView.getUrl(); }
}
