package io.swiftbrowse.tabs;

import android.webkit.WebResourceRequest;
import android.webkit.WebResourceResponse;
import android.webkit.WebView;
import android.webkit.WebViewClient;

import io.swiftbrowse.adblock.HostFilter;

import java.io.ByteArrayInputStream;

class BlockingWebViewClient extends WebViewClient {
    private static final WebResourceResponse EMPTY =
            new WebResourceResponse("text/plain", "utf-8", new ByteArrayInputStream(new byte[0]));

    @Override
    public WebResourceResponse shouldInterceptRequest(WebView view, WebResourceRequest request) {
        String host = request.getUrl().getHost();
        if (host != null && HostFilter.getInstance().isBlocked(host)) {
            return EMPTY;
        }
        return super.shouldInterceptRequest(view, request);
    }
}
