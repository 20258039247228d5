package org.melodeck.music.service;

import android.app.Service;
import android.content.Intent;
import android.media.MediaPlayer;
import android.os.Binder;
import android.os.IBinder;

import org.melodeck.music.model.Track;

import java.util.List;

public class MusicService extends Service implements MediaPlayer.OnCompletionListener {
    private final IBinder binder = new MusicBinder();
    private MediaPlayer player;
    private List<Track> tracks;
    private int position;
    private boolean shuffle;
    private boolean repeat;

    public class MusicBinder extends Binder {
        public MusicService getService() {
            return MusicService.this;
        }
    }

    @Override
    public void onCreate() {
        super.onCreate();
        player = new MediaPlayer();
        player.setOnCompletionListener(this);
    }

    public void setTracks(List<Track> tracks) {
        this.tracks = tracks;
        this.position = 0;
    }

    public void playTrack(int index) {
        position = index;
        Track track = tracks.get(position);
        player.reset();
        try {
            player.setDataSource(track.getPath());
            player.prepare();
            player.start();
        } catch (Exception e) {
            playNext();
        }
    }

    public void pausePlayback() {
        if (player.isPlaying()) player.pause();
    }

    public void seek(int positionMs) {
        player.seekTo(positionMs);
    }

    public void playNext() {
        if (tracks == null || tracks.isEmpty()) return;
        if (shuffle) {
            position = new java.util.Random().nextInt(tracks.size());
        } else {
            position++;
            if (position >= tracks.size()) {
                if (!repeat) return;
                position = 0;
            }
        }
        playTrack(position);
    }

    public void setShuffle(boolean shuffle) {
        this.shuffle = shuffle;
    }

    public void setRepeat(boolean repeat) {
        this.repeat = repeat;
    }

    @Override
    public void onCompletion(MediaPlayer mp) {
        playNext();
    }

    @Override
    public IBinder onBind(Intent intent) {
        return binder;
    }

    @Override
    public void onDestroy() {
        player.release();
        super.onDestroy();
    }
}
